#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "egcd/core.hpp"

namespace egcd {

/// State of the 3x2 stack at loop boundary k. Row 0 is the state before the
/// first iteration and carries no quotient; row k >= 1 records the quotient
/// used to reach it.
struct TraceRow {
    std::size_t k = 0;
    std::optional<Int> q;
    Nat a, b;
    Int c, d, e, f;

    Mat2 coefficients() const { return {c, d, e, f}; }

    friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct EgcdTrace {
    Nat alpha, beta;
    std::vector<TraceRow> steps;
    BezoutTriple result;

    friend bool operator==(const EgcdTrace&, const EgcdTrace&) = default;
};

enum class Clause {
    none,
    row_relation,   // [a b] = [alpha beta] * [[c d] [e f]]
    gcd_preserved,  // gcd(a, b) = gcd(alpha, beta)
    exit_identity,  // a = alpha c + beta e on the final row
    exit_gcd,       // a = gcd(alpha, beta) on the final row
    transition,     // row k follows from row k-1 by one division step
    step_product,   // accumulated matrix = product of recorded step matrices
    result_mismatch,
};

const char* clause_name(Clause c);

struct CheckResult {
    bool ok = true;
    std::optional<std::string> violated;
    Clause clause = Clause::none;
    std::optional<std::size_t> k;

    static CheckResult pass() { return {}; }
    static CheckResult fail(Clause clause, std::optional<std::size_t> k, std::string detail);

    explicit operator bool() const noexcept { return ok; }
};

/// Replays egcd_iterative, recording one row per loop boundary.
EgcdTrace egcd_traced(const Nat& alpha, const Nat& beta);

/// Both loop-invariant clauses, checked exactly on a single row.
CheckResult check_invariant(const TraceRow& row, const Nat& alpha, const Nat& beta);

/// Exit argument: last.a = alpha c + beta e and last.a = gcd(alpha, beta).
/// Throws MalformedTrace if the trace is empty or its last row has b != 0.
CheckResult check_exit(const EgcdTrace& trace);

/// Recomputes each row's coefficient matrix as the left-to-right product of
/// the step matrices built from the recorded quotients.
CheckResult check_step_products(const EgcdTrace& trace);

/// Row k is row k-1 advanced by one division step: q_k = floor(a/b),
/// (a_k, b_k) = (b_{k-1}, a_{k-1} mod b_{k-1}), and row indices run 0, 1, ...
CheckResult check_transitions(const EgcdTrace& trace);

/// Every check above plus result = (last.a, last.c, last.e). Returns the
/// first failure. Throws MalformedTrace like check_exit.
CheckResult check_trace(const EgcdTrace& trace);

/// Operand ceiling of the trial-division oracle.
inline constexpr std::uint64_t kOracleBound = 1'000'000;

/// Within this ceiling check_invariant evaluates the gcd clause with the
/// trial-division oracle; above it core gcd is used.
inline constexpr std::uint64_t kInvariantOracleLimit = 4096;

/// Greatest common divisor by descending trial division. Deliberately slow.
/// Throws OracleBoundExceeded when a or b exceeds kOracleBound.
Nat oracle_gcd(const Nat& a, const Nat& b);

/// t.d = oracle_gcd(a, b) and t.d = a t.x + b t.y. Any valid Bezout pair is
/// accepted.
bool oracle_verify(const Nat& a, const Nat& b, const BezoutTriple& t);

/// (F(n+1), F(n)) with F(1) = F(2) = 1. Throws InvalidInput for n < 2.
std::pair<Nat, Nat> fibonacci_pair(unsigned n);

}  // namespace egcd
