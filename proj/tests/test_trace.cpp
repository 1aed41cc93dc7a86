#include "doctest.h"

#include <random>

#include "egcd/trace.hpp"
#include "reference.hpp"

using namespace egcd;

namespace {

TraceRow row(std::size_t k, std::optional<int> q, int a, int b, int c, int d, int e, int f) {
    return {k, q ? std::optional<Int>(*q) : std::nullopt, a, b, c, d, e, f};
}

}  // namespace

TEST_CASE("egcd_traced(12, 8)") {
    // Hand-unrolled: q1 = 1, [[12,8],[1,0],[0,1]] A1 = [[8,4],[0,1],[1,-1]];
    // q2 = 2, ... A2 = [[4,0],[1,-2],[-1,3]].
    const EgcdTrace t = egcd_traced(12, 8);
    REQUIRE(t.steps.size() == 3);
    CHECK(t.steps[0] == row(0, std::nullopt, 12, 8, 1, 0, 0, 1));
    CHECK(t.steps[1] == row(1, 1, 8, 4, 0, 1, 1, -1));
    CHECK(t.steps[2] == row(2, 2, 4, 0, 1, -2, -1, 3));
    CHECK(t.result == BezoutTriple{4, 1, -1});
    CHECK(check_trace(t));
}

TEST_CASE("egcd_traced with b = 0 at entry") {
    const EgcdTrace t7 = egcd_traced(7, 0);
    REQUIRE(t7.steps.size() == 1);
    CHECK(t7.steps[0] == row(0, std::nullopt, 7, 0, 1, 0, 0, 1));
    CHECK(t7.result == BezoutTriple{7, 1, 0});

    const EgcdTrace t0 = egcd_traced(0, 0);
    REQUIRE(t0.steps.size() == 1);
    CHECK(t0.steps[0] == row(0, std::nullopt, 0, 0, 1, 0, 0, 1));
    CHECK(t0.result == BezoutTriple{0, 1, 0});
    CHECK(check_trace(t0));
}

TEST_CASE("check_invariant") {
    CHECK(check_invariant(row(0, std::nullopt, 12, 8, 1, 0, 0, 1), 12, 8).ok);
    CHECK(check_invariant(row(1, 1, 8, 4, 0, 1, 1, -1), 12, 8).ok);

    const CheckResult bad = check_invariant(row(1, 1, 8, 4, 0, 1, 1, -1), 13, 8);
    CHECK_FALSE(bad.ok);
    CHECK(bad.clause == Clause::row_relation);
    CHECK(bad.k == std::optional<std::size_t>(1));
    REQUIRE(bad.violated);
    CHECK(bad.violated->find("clause 1") != std::string::npos);
    CHECK(bad.violated->find("k=1") != std::string::npos);

    // [2 3] * [[2,0],[0,2]] = [4 6] satisfies clause 1, but the matrix is not
    // unimodular so the gcd doubles.
    const CheckResult gcd_bad = check_invariant(row(1, 0, 4, 6, 2, 0, 0, 2), 2, 3);
    CHECK_FALSE(gcd_bad.ok);
    CHECK(gcd_bad.clause == Clause::gcd_preserved);
    CHECK(gcd_bad.violated->find("clause 2") != std::string::npos);

    CheckResult ok = check_invariant(row(0, std::nullopt, 0, 0, 1, 0, 0, 1), 0, 0);
    CHECK(ok.ok);
    CHECK_FALSE(ok.violated);
}

TEST_CASE("check_invariant clause 2 on large operands uses core gcd") {
    const Nat big = Nat::parse("0x" + std::string(40, 'f'));
    const EgcdTrace t = egcd_traced(big, Nat(mpz_class(big.mpz() - 12345)));
    for (const TraceRow& r : t.steps) REQUIRE(check_invariant(r, t.alpha, t.beta).ok);
}

TEST_CASE("check_exit") {
    const EgcdTrace t = egcd_traced(12, 8);
    CHECK(check_exit(t).ok);
    CHECK(check_exit(egcd_traced(7, 0)).ok);
    CHECK(check_exit(egcd_traced(240, 46)).ok);

    EgcdTrace unfinished = t;
    unfinished.steps.pop_back();
    CHECK_THROWS_AS(check_exit(unfinished), MalformedTrace);
    EgcdTrace empty = t;
    empty.steps.clear();
    CHECK_THROWS_AS(check_exit(empty), MalformedTrace);

    EgcdTrace wrong = t;
    wrong.steps.back().c = 2;
    const CheckResult r = check_exit(wrong);
    CHECK_FALSE(r.ok);
    CHECK(r.clause == Clause::exit_identity);

    // A consistent identity with a non-gcd value: alpha = 4, beta = 6,
    // final a = 4 with c = 1, e = 0.
    EgcdTrace not_gcd{4, 6, {row(0, std::nullopt, 4, 0, 1, 0, 0, 1)}, {4, 1, 0}};
    const CheckResult g = check_exit(not_gcd);
    CHECK_FALSE(g.ok);
    CHECK(g.clause == Clause::exit_gcd);
}

TEST_CASE("check_transitions and check_step_products catch forged rows") {
    EgcdTrace t = egcd_traced(240, 46);
    CHECK(check_transitions(t));
    CHECK(check_step_products(t));

    EgcdTrace q_forged = t;
    q_forged.steps[2].q = *q_forged.steps[2].q + Int(1);
    CHECK_FALSE(check_step_products(q_forged).ok);
    CHECK_FALSE(check_transitions(q_forged).ok);

    EgcdTrace k_forged = t;
    k_forged.steps[1].k = 7;
    CHECK_FALSE(check_transitions(k_forged).ok);

    EgcdTrace missing_q = t;
    missing_q.steps[1].q.reset();
    CHECK_FALSE(check_step_products(missing_q).ok);
}

TEST_CASE("trace properties on random inputs") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const Nat a = testing::random_nat(rng, rng() % 200);
        const Nat b = testing::random_nat(rng, rng() % 200);
        const EgcdTrace t = egcd_traced(a, b);
        REQUIRE(t.result == egcd_iterative(a, b));
        REQUIRE(check_trace(t).ok);
        for (std::size_t k = 0; k < t.steps.size(); ++k) {
            const TraceRow& r = t.steps[k];
            REQUIRE(check_invariant(r, a, b).ok);
            REQUIRE(r.coefficients().det() == Int(k % 2 == 0 ? 1 : -1));
            if (k > 0) {
                const TraceRow& p = t.steps[k - 1];
                REQUIRE(r.a == p.b);
                REQUIRE(r.b.mpz() == mpz_class(p.a.mpz() % p.b.mpz()));
                REQUIRE(r.b < p.b);
            }
        }
    }
}

TEST_CASE("single +1 perturbations are always detected") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        const EgcdTrace t = egcd_traced(testing::random_nat(rng, rng() % 64), testing::random_nat(rng, rng() % 64));
        for (std::size_t k = 0; k < t.steps.size(); ++k) {
            for (int field = 0; field < 7; ++field) {
                if (field == 0 && k == 0) continue;  // no quotient at k = 0
                EgcdTrace m = t;
                TraceRow& r = m.steps[k];
                switch (field) {
                    case 0: *r.q += Int(1); break;
                    case 1: r.a = Nat(mpz_class(r.a.mpz() + 1)); break;
                    case 2: r.b = Nat(mpz_class(r.b.mpz() + 1)); break;
                    case 3: r.c += Int(1); break;
                    case 4: r.d += Int(1); break;
                    case 5: r.e += Int(1); break;
                    case 6: r.f += Int(1); break;
                }
                const bool caught = !check_invariant(r, m.alpha, m.beta).ok || !check_step_products(m).ok;
                REQUIRE_MESSAGE(caught, "k=" << k << " field=" << field);
            }
        }
    }
}

TEST_CASE("oracle_gcd") {
    CHECK(oracle_gcd(240, 46) == Nat(2));
    CHECK(oracle_gcd(9, 0) == Nat(9));
    CHECK(oracle_gcd(0, 9) == Nat(9));
    CHECK(oracle_gcd(0, 0) == Nat(0));
    CHECK(oracle_gcd(17, 13) == Nat(1));
    CHECK(oracle_gcd(1'000'000, 999'999) == Nat(1));
    CHECK_THROWS_AS(oracle_gcd(1'000'001, 5), OracleBoundExceeded);
    CHECK_THROWS_AS(oracle_gcd(5, 1'000'001), OracleBoundExceeded);
}

TEST_CASE("oracle_verify") {
    CHECK(oracle_verify(12, 8, {4, 1, -1}));
    CHECK(oracle_verify(12, 8, {4, 3, -4}));
    CHECK_FALSE(oracle_verify(12, 8, {4, 1, 0}));
    CHECK_FALSE(oracle_verify(12, 8, {2, 1, -1}));
    CHECK_THROWS_AS(oracle_verify(2'000'000, 8, {2, 0, 0}), OracleBoundExceeded);
}

TEST_CASE("fibonacci_pair") {
    CHECK(fibonacci_pair(2) == std::pair<Nat, Nat>(2, 1));
    CHECK(fibonacci_pair(5) == std::pair<Nat, Nat>(8, 5));
    CHECK(fibonacci_pair(10) == std::pair<Nat, Nat>(89, 55));
    CHECK(fibonacci_pair(31) == std::pair<Nat, Nat>(2178309, 1346269));
    CHECK_THROWS_AS(fibonacci_pair(1), InvalidInput);
    CHECK_THROWS_AS(fibonacci_pair(0), InvalidInput);
}

TEST_CASE("fibonacci pairs take n - 1 iterations") {
    for (unsigned n = 2; n <= 40; ++n) {
        const auto [a, b] = fibonacci_pair(n);
        REQUIRE(egcd_traced(a, b).steps.size() == n);
    }
}
