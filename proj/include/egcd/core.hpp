#pragma once

#include <cstddef>

#include "egcd/numbers.hpp"

namespace egcd {

/// Row-major 2x2 integer matrix.
struct Mat2 {
    Int m00{1}, m01{0}, m10{0}, m11{1};

    static Mat2 identity() { return {}; }

    Mat2 transpose() const { return {m00, m10, m01, m11}; }
    Int det() const { return m00 * m11 - m01 * m10; }

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// 1x2 row vector.
struct Row2 {
    Int r0, r1;

    friend bool operator==(const Row2&, const Row2&) = default;
};

/// (d, x, y) with d = gcd(a, b) = a*x + b*y.
struct BezoutTriple {
    Nat d;
    Int x, y;

    friend bool operator==(const BezoutTriple&, const BezoutTriple&) = default;
};

/// The 3x2 working stack [[a, b], [c, d], [e, f]] of the iterative algorithm.
/// Every loop iteration right-multiplies all three rows by the step matrix.
struct EgcdState {
    Row2 ab, cd, ef;
};

Nat gcd(const Nat& a, const Nat& b);

/// Recursive form: base case (a, 1, 0), otherwise (d, y', x' - floor(a/b) y')
/// from the call on (b, a mod b).
///
/// There is no depth cap. Depth is the number of division steps plus one,
/// at most about 1.44 * bits(b) + 2; 4096-bit operands need under 6000
/// frames, well inside the default 8 MiB stack. See recursion_depth_ceiling().
/// When `depth` is non-null it receives the number of calls made, base call
/// included.
BezoutTriple egcd_recursive(const Nat& a, const Nat& b, std::size_t* depth = nullptr);

/// [[0, 1], [1, -floor(a/b)]]. Throws DivisionByZero when b = 0.
Mat2 step_matrix(const Nat& a, const Nat& b);

Mat2 mat2_mul(const Mat2& lhs, const Mat2& rhs);
Row2 row_mul(const Row2& v, const Mat2& m);

/// Right-multiplies `row` in place by [[0, 1], [1, -q]]: (r0, r1) -> (r1, r0 - q r1).
inline void apply_step(Row2& row, const mpz_class& q) {
    mpz_submul(row.r0.mpz().get_mpz_t(), q.get_mpz_t(), row.r1.mpz().get_mpz_t());
    swap(row.r0.mpz(), row.r1.mpz());
}

/// Runs the matrix-form loop on the stack initialised to
/// [[alpha, beta], [1, 0], [0, 1]] until b = 0, returning (a, c, e).
///
/// `on_step(k, q, state)` fires after each iteration k = 1, 2, ... with the
/// quotient used. All state lives in the six stack entries and one quotient,
/// so auxiliary memory does not grow with the iteration count.
template <class OnStep>
BezoutTriple egcd_iterative_observed(const Nat& alpha, const Nat& beta, OnStep&& on_step) {
    EgcdState s{{alpha, beta}, {1, 0}, {0, 1}};
    mpz_class q;
    std::size_t k = 0;
    while (sgn(s.ab.r1.mpz()) != 0) {
        mpz_tdiv_q(q.get_mpz_t(), s.ab.r0.mpz().get_mpz_t(), s.ab.r1.mpz().get_mpz_t());
        apply_step(s.ab, q);
        apply_step(s.cd, q);
        apply_step(s.ef, q);
        on_step(++k, q, static_cast<const EgcdState&>(s));
    }
    return {Nat(std::move(s.ab.r0.mpz())), std::move(s.cd.r0), std::move(s.ef.r0)};
}

BezoutTriple egcd_iterative(const Nat& a, const Nat& b);

/// Conservative recursion depth available to egcd_recursive on the calling
/// thread's main stack, derived from RLIMIT_STACK.
std::size_t recursion_depth_ceiling();

/// Upper bound on Euclid division steps when the smaller operand has at
/// most `bits` bits (Lamé: steps <= log_phi(b) + 2).
std::size_t max_division_steps(std::size_t bits);

}  // namespace egcd
