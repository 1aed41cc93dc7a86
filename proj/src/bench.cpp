#include "egcd/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <string>

#include "egcd/core.hpp"

namespace egcd {

namespace {

struct Trial {
    std::uint64_t ns = 0;
    std::size_t iterations = 0;
};

Trial run_trial(Variant variant, const Nat& a, const Nat& b) {
    using clock = std::chrono::steady_clock;
    Trial t;
    const auto start = clock::now();
    if (variant == Variant::iterative) {
        std::size_t k = 0;
        egcd_iterative_observed(a, b, [&k](std::size_t step, const mpz_class&, const EgcdState&) { k = step; });
        t.iterations = k;
    } else {
        std::size_t depth = 0;
        egcd_recursive(a, b, &depth);
        t.iterations = depth - 1;
    }
    const auto stop = clock::now();
    t.ns = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    return t;
}

}  // namespace

const char* variant_name(Variant v) {
    return v == Variant::recursive ? "recursive" : "iterative";
}

Variant parse_variant(std::string_view name) {
    if (name == "recursive") return Variant::recursive;
    if (name == "iterative") return Variant::iterative;
    throw InvalidInput("unknown variant '" + std::string(name) + "' (expected recursive or iterative)");
}

std::size_t iteration_count(const Nat& a, const Nat& b) {
    std::size_t k = 0;
    egcd_iterative_observed(a, b, [&k](std::size_t step, const mpz_class&, const EgcdState&) { k = step; });
    return k;
}

std::vector<std::pair<Nat, Nat>> bench_operands(std::size_t bits, std::size_t count, std::uint64_t seed) {
    if (bits < 2) throw InvalidInput("bench: bits must be >= 2");
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(mpz_class(std::to_string(seed)));
    const mpz_class top = mpz_class(1) << static_cast<mp_bitcnt_t>(bits - 1);
    std::vector<std::pair<Nat, Nat>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        mpz_class a = top + rng.get_z_bits(static_cast<mp_bitcnt_t>(bits - 1));
        mpz_class b = rng.get_z_range(a);
        out.emplace_back(Nat(std::move(a)), Nat(std::move(b)));
    }
    return out;
}

BenchReport run_bench(Variant variant, std::size_t bits, std::size_t count, std::uint64_t seed, Execution exec) {
    if (count == 0) throw InvalidInput("bench: count must be >= 1");
    if (bits < 2) throw InvalidInput("bench: bits must be >= 2");
    if (variant == Variant::recursive) {
        const std::size_t need = max_division_steps(bits) + 1;
        const std::size_t have = recursion_depth_ceiling();
        if (need > have) {
            throw ResourceExhausted("bench: recursive variant at " + std::to_string(bits) + " bits may need " +
                                    std::to_string(need) + " frames, stack allows about " + std::to_string(have));
        }
    }

    const auto operands = bench_operands(bits, count, seed);
    run_trial(variant, operands.front().first, operands.front().second);  // warm-up

    std::vector<Trial> trials(count);
    const auto n = static_cast<std::ptrdiff_t>(count);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            trials[i] = run_trial(variant, operands[i].first, operands[i].second);
        }
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            trials[i] = run_trial(variant, operands[i].first, operands[i].second);
        }
    }

    BenchReport r;
    r.variant = variant;
    r.bits = bits;
    r.count = count;
    r.seed = seed;
    r.iterations_min = std::numeric_limits<std::size_t>::max();
    std::uint64_t iter_sum = 0;
    for (const Trial& t : trials) {
        r.total_ns += t.ns;
        r.iterations_min = std::min(r.iterations_min, t.iterations);
        r.iterations_max = std::max(r.iterations_max, t.iterations);
        iter_sum += t.iterations;
    }
    r.iterations_mean = static_cast<double>(iter_sum) / static_cast<double>(count);
    return r;
}

}  // namespace egcd
