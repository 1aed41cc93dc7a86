#include "egcd/core.hpp"

#include <cmath>

#include <sys/resource.h>

namespace egcd {

namespace {

// Returns (x, y) through the out-parameters and d as the result; a >= 0, b >= 0.
mpz_class egcd_rec(const mpz_class& a, const mpz_class& b, mpz_class& x, mpz_class& y,
                   std::size_t& depth) {
    ++depth;
    if (sgn(b) == 0) {
        x = 1;
        y = 0;
        return a;
    }
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_class xp, yp;
    mpz_class d = egcd_rec(b, r, xp, yp, depth);
    x = yp;
    y = xp - q * yp;
    return d;
}

// Stack bytes budgeted per egcd_rec frame; measured frames are well under half.
constexpr std::size_t kFrameBudget = 1024;
// Stack kept in reserve for the caller and GMP scratch space.
constexpr std::size_t kStackReserve = 256 * 1024;

}  // namespace

Nat gcd(const Nat& a, const Nat& b) {
    mpz_class x = a.mpz(), y = b.mpz(), r;
    while (sgn(y) != 0) {
        mpz_tdiv_r(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        swap(x, y);
        swap(y, r);
    }
    return Nat(std::move(x));
}

BezoutTriple egcd_recursive(const Nat& a, const Nat& b, std::size_t* depth) {
    mpz_class x, y;
    std::size_t calls = 0;
    mpz_class d = egcd_rec(a.mpz(), b.mpz(), x, y, calls);
    if (depth) *depth = calls;
    return {Nat(std::move(d)), Int(std::move(x)), Int(std::move(y))};
}

Mat2 step_matrix(const Nat& a, const Nat& b) {
    if (b.is_zero()) throw DivisionByZero("step_matrix: b must be non-zero");
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return {0, 1, 1, Int(mpz_class(-q))};
}

Mat2 mat2_mul(const Mat2& l, const Mat2& r) {
    return {l.m00 * r.m00 + l.m01 * r.m10, l.m00 * r.m01 + l.m01 * r.m11,
            l.m10 * r.m00 + l.m11 * r.m10, l.m10 * r.m01 + l.m11 * r.m11};
}

Row2 row_mul(const Row2& v, const Mat2& m) {
    return {v.r0 * m.m00 + v.r1 * m.m10, v.r0 * m.m01 + v.r1 * m.m11};
}

BezoutTriple egcd_iterative(const Nat& a, const Nat& b) {
    return egcd_iterative_observed(a, b, [](std::size_t, const mpz_class&, const EgcdState&) {});
}

std::size_t recursion_depth_ceiling() {
    rlimit lim{};
    std::size_t bytes = 8u << 20;
    if (getrlimit(RLIMIT_STACK, &lim) == 0 && lim.rlim_cur != RLIM_INFINITY) {
        bytes = static_cast<std::size_t>(lim.rlim_cur);
    }
    if (bytes <= kStackReserve) return 0;
    return (bytes - kStackReserve) / kFrameBudget;
}

std::size_t max_division_steps(std::size_t bits) {
    // log_phi(2) = 1.44042...; +1 for the swap step when a < b, +2 from Lamé.
    return static_cast<std::size_t>(std::ceil(static_cast<double>(bits) * 1.4405)) + 3;
}

}  // namespace egcd
