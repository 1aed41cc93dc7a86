#include "egcd/sweep.hpp"

#include <functional>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "egcd/core.hpp"
#include "egcd/modular.hpp"
#include "egcd/trace.hpp"

namespace egcd {

namespace {

struct ItemOutcome {
    std::uint64_t checks = 0;
    std::optional<std::string> violation;
};

using ItemCheck = std::function<ItemOutcome(std::size_t)>;

void record(SweepStats& stats, std::size_t& first_index, std::size_t i, ItemOutcome&& out) {
    ++stats.pairs;
    stats.checks += out.checks;
    if (out.violation) {
        ++stats.violations;
        if (i < first_index) {
            first_index = i;
            stats.first_violation = std::move(out.violation);
        }
    }
}

SweepStats run_items(std::size_t n, const ItemCheck& check, Execution exec) {
    SweepStats total;
    std::size_t first = std::numeric_limits<std::size_t>::max();
    const auto count = static_cast<std::ptrdiff_t>(n);
    if (exec == Execution::serial) {
        for (std::ptrdiff_t i = 0; i < count; ++i) record(total, first, i, check(i));
        return total;
    }
#pragma omp parallel
    {
        SweepStats local;
        std::size_t local_first = std::numeric_limits<std::size_t>::max();
#pragma omp for schedule(dynamic, 64) nowait
        for (std::ptrdiff_t i = 0; i < count; ++i) record(local, local_first, i, check(i));
#pragma omp critical(egcd_sweep_merge)
        {
            total.pairs += local.pairs;
            total.checks += local.checks;
            total.violations += local.violations;
            if (local_first < first) {
                first = local_first;
                total.first_violation = std::move(local.first_violation);
            }
        }
    }
    return total;
}

std::string pair_label(const Nat& a, const Nat& b) {
    return "(" + a.str() + ", " + b.str() + ")";
}

mpz_class random_operand(gmp_randclass& rng, std::size_t max_bits) {
    const unsigned long bits = mpz_class(rng.get_z_range(mpz_class(static_cast<unsigned long>(max_bits + 1)))).get_ui();
    if (bits == 0) return 0;
    const mpz_class top = mpz_class(1) << static_cast<mp_bitcnt_t>(bits - 1);
    return top + rng.get_z_bits(static_cast<mp_bitcnt_t>(bits - 1));
}

}  // namespace

int parallel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

SweepStats& SweepStats::operator+=(const SweepStats& o) {
    pairs += o.pairs;
    checks += o.checks;
    violations += o.violations;
    if (!first_violation) first_violation = o.first_violation;
    return *this;
}

std::vector<Pair> domain_pairs(std::uint64_t limit, PairDomain domain) {
    std::vector<Pair> out;
    for (std::uint64_t a = 0; a <= limit; ++a) {
        const std::uint64_t b_max = domain == PairDomain::ordered ? a : limit;
        for (std::uint64_t b = 0; b <= b_max; ++b) out.emplace_back(a, b);
    }
    return out;
}

SweepStats oracle_sweep(std::uint64_t limit, PairDomain domain, Execution exec) {
    if (limit > kOracleBound) {
        throw OracleBoundExceeded("oracle_sweep: limit must be <= " + std::to_string(kOracleBound));
    }
    const auto pairs = domain_pairs(limit, domain);
    return run_items(
        pairs.size(),
        [&pairs](std::size_t i) {
            const auto& [a, b] = pairs[i];
            ItemOutcome out{2, std::nullopt};
            if (!oracle_verify(a, b, egcd_iterative(a, b))) {
                out.violation = "oracle_verify failed for " + pair_label(a, b);
            } else if (gcd(a, b) != oracle_gcd(a, b)) {
                out.violation = "gcd disagrees with oracle_gcd for " + pair_label(a, b);
            }
            return out;
        },
        exec);
}

SweepStats cross_variant_sweep(std::span<const Pair> pairs, Execution exec) {
    return run_items(
        pairs.size(),
        [pairs](std::size_t i) {
            const auto& [a, b] = pairs[i];
            ItemOutcome out{1, std::nullopt};
            if (egcd_recursive(a, b) != egcd_iterative(a, b)) {
                out.violation = "recursive and iterative results differ for " + pair_label(a, b);
            }
            return out;
        },
        exec);
}

SweepStats invariant_sweep(std::span<const Pair> pairs, Execution exec) {
    return run_items(
        pairs.size(),
        [pairs](std::size_t i) {
            const auto& [a, b] = pairs[i];
            const EgcdTrace trace = egcd_traced(a, b);
            ItemOutcome out{trace.steps.size(), std::nullopt};
            if (CheckResult r = check_trace(trace); !r) {
                out.violation = pair_label(a, b) + ": " + *r.violated;
            } else if (trace.result != egcd_iterative(a, b)) {
                out.violation = pair_label(a, b) + ": trace result differs from egcd_iterative";
            }
            return out;
        },
        exec);
}

SweepStats inverse_sweep(std::uint64_t max_m, Execution exec) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> items;
    for (std::uint64_t m = 2; m <= max_m; ++m) {
        for (std::uint64_t a = 1; a < m; ++a) items.emplace_back(a, m);
    }
    return run_items(
        items.size(),
        [&items](std::size_t i) {
            const auto [a, m] = items[i];
            const auto expected = oracle_inverse(a, m);
            std::optional<std::uint64_t> got;
            try {
                got = mod_inverse(Nat(a), Modulus(Nat(m))).to_ulong();
            } catch (const NonInvertible&) {
            }
            ItemOutcome out{1, std::nullopt};
            if (got != expected) {
                out.violation = "mod_inverse(" + std::to_string(a) + ", " + std::to_string(m) +
                                ") = " + (got ? std::to_string(*got) : "none") + ", exhaustive search gives " +
                                (expected ? std::to_string(*expected) : "none");
            }
            return out;
        },
        exec);
}

std::vector<Pair> random_pairs(std::size_t count, std::size_t max_bits, std::uint64_t seed) {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(mpz_class(std::to_string(seed)));
    std::vector<Pair> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        mpz_class a = random_operand(rng, max_bits);
        mpz_class b = random_operand(rng, max_bits);
        out.emplace_back(Nat(std::move(a)), Nat(std::move(b)));
    }
    return out;
}

std::optional<std::uint64_t> oracle_inverse(std::uint64_t a, std::uint64_t m) {
    if (m == 0) return std::nullopt;
    if (m == 1) return 0;
    for (std::uint64_t v = 0; v < m; ++v) {
        if ((a % m) * v % m == 1) return v;
    }
    return std::nullopt;
}

}  // namespace egcd
