#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "egcd/execution.hpp"
#include "egcd/numbers.hpp"

namespace egcd {

/// Tally of a verification sweep. With several violations, first_violation
/// describes the one at the lowest item index regardless of execution mode.
struct SweepStats {
    std::uint64_t pairs = 0;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::optional<std::string> first_violation;

    bool clean() const noexcept { return violations == 0; }

    SweepStats& operator+=(const SweepStats& o);
    friend bool operator==(const SweepStats&, const SweepStats&) = default;
};

enum class PairDomain {
    all,      // 0 <= a, b <= limit
    ordered,  // 0 <= b <= a <= limit
};

using Pair = std::pair<Nat, Nat>;

/// Every pair of the domain: egcd_iterative passes oracle_verify and gcd
/// agrees with oracle_gcd. Two checks per pair.
SweepStats oracle_sweep(std::uint64_t limit, PairDomain domain, Execution exec);

/// egcd_recursive and egcd_iterative agree bit-exactly on every pair.
SweepStats cross_variant_sweep(std::span<const Pair> pairs, Execution exec);

/// Traces every pair and runs check_trace on it. Counts one check per row.
SweepStats invariant_sweep(std::span<const Pair> pairs, Execution exec);

/// For m in [2, max_m] and a in [1, m): mod_inverse agrees with
/// oracle_inverse on existence and value.
SweepStats inverse_sweep(std::uint64_t max_m, Execution exec);

/// Pairs whose operands independently take a uniform bit length in
/// [0, max_bits] and then a uniform value of that length.
std::vector<Pair> random_pairs(std::size_t count, std::size_t max_bits, std::uint64_t seed);

/// The pairs oracle_sweep visits, in its order.
std::vector<Pair> domain_pairs(std::uint64_t limit, PairDomain domain);

/// Exhaustive search for v in [0, m) with a v = 1 (mod m); m = 1 gives 0.
std::optional<std::uint64_t> oracle_inverse(std::uint64_t a, std::uint64_t m);

}  // namespace egcd
