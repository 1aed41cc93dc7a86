#include "egcd/trace.hpp"

#include <algorithm>
#include <sstream>

namespace egcd {

namespace {

std::string describe(Clause clause, std::optional<std::size_t> k, const std::string& detail) {
    std::ostringstream os;
    os << clause_name(clause);
    if (k) os << " violated at k=" << *k;
    if (!detail.empty()) os << ": " << detail;
    return os.str();
}

Nat invariant_gcd(const Nat& a, const Nat& b, bool use_oracle) {
    return use_oracle ? oracle_gcd(a, b) : gcd(a, b);
}

const TraceRow& last_row(const EgcdTrace& trace) {
    if (trace.steps.empty()) throw MalformedTrace("trace has no rows");
    const TraceRow& last = trace.steps.back();
    if (!last.b.is_zero()) {
        throw MalformedTrace("last row (k=" + std::to_string(last.k) + ") has b=" + last.b.str() +
                             ", expected 0");
    }
    return last;
}

}  // namespace

const char* clause_name(Clause c) {
    switch (c) {
        case Clause::none: return "none";
        case Clause::row_relation: return "clause 1 ([a b] = [alpha beta] M)";
        case Clause::gcd_preserved: return "clause 2 (gcd(a,b) = gcd(alpha,beta))";
        case Clause::exit_identity: return "exit identity (a = alpha c + beta e)";
        case Clause::exit_gcd: return "exit gcd (a = gcd(alpha,beta))";
        case Clause::transition: return "transition ((a,b) <- (b, a mod b))";
        case Clause::step_product: return "step product (M = A1 A2 ... Ak)";
        case Clause::result_mismatch: return "result ((d,x,y) = (a,c,e))";
    }
    return "unknown";
}

CheckResult CheckResult::fail(Clause clause, std::optional<std::size_t> k, std::string detail) {
    CheckResult r;
    r.ok = false;
    r.clause = clause;
    r.k = k;
    r.violated = describe(clause, k, detail);
    return r;
}

EgcdTrace egcd_traced(const Nat& alpha, const Nat& beta) {
    EgcdTrace trace{alpha, beta, {}, {}};
    trace.steps.push_back({0, std::nullopt, alpha, beta, 1, 0, 0, 1});
    trace.result = egcd_iterative_observed(
        alpha, beta, [&](std::size_t k, const mpz_class& q, const EgcdState& s) {
            trace.steps.push_back({k, Int(q), Nat(s.ab.r0), Nat(s.ab.r1), s.cd.r0, s.cd.r1,
                                   s.ef.r0, s.ef.r1});
        });
    return trace;
}

CheckResult check_invariant(const TraceRow& row, const Nat& alpha, const Nat& beta) {
    const Row2 expected = row_mul({alpha, beta}, row.coefficients());
    if (expected != Row2{row.a, row.b}) {
        return CheckResult::fail(Clause::row_relation, row.k,
                                 "[alpha beta] M = [" + expected.r0.str() + " " + expected.r1.str() +
                                     "] but [a b] = [" + row.a.str() + " " + row.b.str() + "]");
    }
    const bool small = alpha <= Nat(kInvariantOracleLimit) && beta <= Nat(kInvariantOracleLimit) &&
                       row.a <= Nat(kInvariantOracleLimit) && row.b <= Nat(kInvariantOracleLimit);
    const Nat g_row = invariant_gcd(row.a, row.b, small);
    const Nat g_init = invariant_gcd(alpha, beta, small);
    if (g_row != g_init) {
        return CheckResult::fail(Clause::gcd_preserved, row.k,
                                 "gcd(a,b) = " + g_row.str() + ", gcd(alpha,beta) = " + g_init.str());
    }
    return CheckResult::pass();
}

CheckResult check_exit(const EgcdTrace& trace) {
    const TraceRow& last = last_row(trace);
    const Int combo = Int(trace.alpha) * last.c + Int(trace.beta) * last.e;
    if (combo != Int(last.a)) {
        return CheckResult::fail(Clause::exit_identity, last.k,
                                 "alpha c + beta e = " + combo.str() + ", a = " + last.a.str());
    }
    const Nat g = gcd(trace.alpha, trace.beta);
    if (g != last.a) {
        return CheckResult::fail(Clause::exit_gcd, last.k,
                                 "gcd(alpha,beta) = " + g.str() + ", a = " + last.a.str());
    }
    return CheckResult::pass();
}

CheckResult check_step_products(const EgcdTrace& trace) {
    Mat2 product = Mat2::identity();
    for (const TraceRow& row : trace.steps) {
        if (row.k > 0) {
            if (!row.q) return CheckResult::fail(Clause::step_product, row.k, "missing quotient");
            product = mat2_mul(product, Mat2{0, 1, 1, -*row.q});
        }
        if (product != row.coefficients()) {
            return CheckResult::fail(Clause::step_product, row.k,
                                     "recorded matrix differs from product of step matrices");
        }
    }
    return CheckResult::pass();
}

CheckResult check_transitions(const EgcdTrace& trace) {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceRow& row = trace.steps[i];
        if (row.k != i) {
            return CheckResult::fail(Clause::transition, row.k,
                                     "row index " + std::to_string(i) + " carries k=" + std::to_string(row.k));
        }
        if (i == 0) {
            if (row.q) return CheckResult::fail(Clause::transition, 0, "initial row carries a quotient");
            if (row.a != trace.alpha || row.b != trace.beta) {
                return CheckResult::fail(Clause::transition, 0, "initial row is not (alpha, beta)");
            }
            continue;
        }
        const TraceRow& prev = trace.steps[i - 1];
        if (prev.b.is_zero()) {
            return CheckResult::fail(Clause::transition, row.k, "loop continued after b = 0");
        }
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), prev.a.mpz().get_mpz_t(), prev.b.mpz().get_mpz_t());
        if (!row.q || row.q->mpz() != q) {
            return CheckResult::fail(Clause::transition, row.k, "quotient is not floor(a/b) of the previous row");
        }
        if (row.a != prev.b || row.b.mpz() != r) {
            return CheckResult::fail(Clause::transition, row.k, "(a,b) is not (b, a mod b) of the previous row");
        }
        if (!(row.b < prev.b)) {
            return CheckResult::fail(Clause::transition, row.k, "b did not strictly decrease");
        }
    }
    return CheckResult::pass();
}

CheckResult check_trace(const EgcdTrace& trace) {
    const TraceRow& last = last_row(trace);
    for (const TraceRow& row : trace.steps) {
        if (auto r = check_invariant(row, trace.alpha, trace.beta); !r) return r;
    }
    if (auto r = check_transitions(trace); !r) return r;
    if (auto r = check_step_products(trace); !r) return r;
    if (auto r = check_exit(trace); !r) return r;
    if (trace.result != BezoutTriple{last.a, last.c, last.e}) {
        return CheckResult::fail(Clause::result_mismatch, last.k, "result is not (a, c, e) of the last row");
    }
    return CheckResult::pass();
}

Nat oracle_gcd(const Nat& a, const Nat& b) {
    if (a > Nat(kOracleBound) || b > Nat(kOracleBound)) {
        throw OracleBoundExceeded("oracle_gcd: operands must be <= " + std::to_string(kOracleBound));
    }
    const unsigned long x = a.to_ulong(), y = b.to_ulong();
    if (x == 0) return Nat(y);
    if (y == 0) return Nat(x);
    for (unsigned long cand = std::min(x, y); cand > 1; --cand) {
        if (x % cand == 0 && y % cand == 0) return Nat(cand);
    }
    return Nat(1);
}

bool oracle_verify(const Nat& a, const Nat& b, const BezoutTriple& t) {
    const Nat g = oracle_gcd(a, b);
    return t.d == g && Int(t.d) == Int(a) * t.x + Int(b) * t.y;
}

std::pair<Nat, Nat> fibonacci_pair(unsigned n) {
    if (n < 2) throw InvalidInput("fibonacci_pair: n must be >= 2");
    mpz_class prev = 1, cur = 1;  // F(1), F(2)
    for (unsigned i = 2; i <= n; ++i) {
        mpz_class next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    // cur = F(n+1), prev = F(n)
    return {Nat(std::move(cur)), Nat(std::move(prev))};
}

}  // namespace egcd
