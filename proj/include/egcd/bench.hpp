#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "egcd/execution.hpp"
#include "egcd/numbers.hpp"

namespace egcd {

enum class Variant { recursive, iterative };

const char* variant_name(Variant v);
/// Throws InvalidInput for anything other than "recursive" or "iterative".
Variant parse_variant(std::string_view name);

struct BenchReport {
    Variant variant = Variant::iterative;
    std::size_t bits = 0;
    std::size_t count = 0;
    std::uint64_t total_ns = 0;
    std::size_t iterations_min = 0;
    double iterations_mean = 0.0;
    std::size_t iterations_max = 0;
    std::uint64_t seed = 0;
};

/// Loop iterations of egcd_iterative(a, b); one less than the recursion
/// depth of egcd_recursive(a, b).
std::size_t iteration_count(const Nat& a, const Nat& b);

/// `count` pairs (a, b) with a exactly `bits` bits and b uniform in [0, a),
/// drawn from a Mersenne Twister seeded with `seed`.
std::vector<std::pair<Nat, Nat>> bench_operands(std::size_t bits, std::size_t count, std::uint64_t seed);

/// Times `variant` on bench_operands(bits, count, seed). One untimed warm-up
/// call precedes the trials; total_ns sums per-trial steady_clock time, so the
/// parallel flavour reports CPU-side work rather than elapsed wall time.
///
/// Throws InvalidInput for bits < 2 or count = 0, and ResourceExhausted when
/// the recursive variant could outgrow recursion_depth_ceiling().
BenchReport run_bench(Variant variant, std::size_t bits, std::size_t count, std::uint64_t seed,
                      Execution exec = Execution::serial);

}  // namespace egcd
