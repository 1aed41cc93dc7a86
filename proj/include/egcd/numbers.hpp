#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "egcd/errors.hpp"

namespace egcd {

/// Arbitrary-precision signed integer. Exact at every magnitude.
class Int {
public:
    Int() = default;

    template <std::integral T>
    Int(T v) : v_(to_mpz(v)) {}  // NOLINT(google-explicit-constructor)

    explicit Int(mpz_class v) : v_(std::move(v)) {}

    /// Decimal with optional leading '-'.
    static Int parse(std::string_view text);

    const mpz_class& mpz() const noexcept { return v_; }
    mpz_class& mpz() noexcept { return v_; }

    std::string str() const { return v_.get_str(); }
    int sign() const noexcept { return sgn(v_); }

    Int operator-() const { return Int(mpz_class(-v_)); }
    Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
    Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
    Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }

    friend Int operator+(Int l, const Int& r) { return l += r; }
    friend Int operator-(Int l, const Int& r) { return l -= r; }
    friend Int operator*(Int l, const Int& r) { return l *= r; }

    friend bool operator==(const Int& l, const Int& r) { return cmp(l.v_, r.v_) == 0; }
    friend std::strong_ordering operator<=>(const Int& l, const Int& r) {
        return cmp(l.v_, r.v_) <=> 0;
    }

private:
    template <std::integral T>
    static mpz_class to_mpz(T v) {
        if constexpr (std::signed_integral<T>) {
            return mpz_class(static_cast<long>(v));
        } else {
            return mpz_class(static_cast<unsigned long>(v));
        }
    }

    mpz_class v_;
};

/// Arbitrary-precision non-negative integer. Construction from a negative
/// source throws InvalidInput.
class Nat {
public:
    Nat() = default;

    template <std::integral T>
    Nat(T v) {  // NOLINT(google-explicit-constructor)
        if constexpr (std::signed_integral<T>) {
            if (v < 0) throw InvalidInput("Nat: value must be non-negative, got " + std::to_string(v));
            v_ = static_cast<unsigned long>(v);
        } else {
            v_ = static_cast<unsigned long>(v);
        }
    }

    explicit Nat(mpz_class v);
    explicit Nat(const Int& v) : Nat(v.mpz()) {}

    /// Accepts decimal digits or a 0x/0X-prefixed hexadecimal literal.
    /// A leading '-' is rejected.
    static Nat parse(std::string_view text);

    const mpz_class& mpz() const noexcept { return v_; }

    std::string str() const { return v_.get_str(); }
    std::size_t bit_length() const;
    bool is_zero() const noexcept { return sgn(v_) == 0; }

    /// Fits in an unsigned long.
    bool fits_ulong() const noexcept { return v_.fits_ulong_p(); }
    unsigned long to_ulong() const;

    Int to_int() const { return Int(v_); }
    operator Int() const { return Int(v_); }  // NOLINT(google-explicit-constructor)

    friend bool operator==(const Nat& l, const Nat& r) { return cmp(l.v_, r.v_) == 0; }
    friend std::strong_ordering operator<=>(const Nat& l, const Nat& r) {
        return cmp(l.v_, r.v_) <=> 0;
    }

private:
    mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const Int& v);
std::ostream& operator<<(std::ostream& os, const Nat& v);

}  // namespace egcd
