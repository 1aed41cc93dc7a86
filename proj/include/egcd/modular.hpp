#pragma once

#include "egcd/numbers.hpp"

namespace egcd {

/// A modulus m >= 1.
class Modulus {
public:
    explicit Modulus(Nat m);

    const Nat& value() const noexcept { return m_; }

private:
    Nat m_;
};

/// The unique v in [0, m) with a v = 1 (mod m), taken from the Bezout
/// coefficient of egcd_iterative(a mod m, m). Returns 0 for m = 1.
/// Throws NonInvertible carrying gcd(a mod m, m) when that gcd is not 1.
Nat mod_inverse(const Nat& a, const Modulus& m);

/// d = e^-1 mod (p-1)(q-1). Primality of p and q is the caller's concern.
/// Throws InvalidInput when p = q or p, q < 2; NonInvertible when
/// gcd(e, (p-1)(q-1)) != 1.
Nat rsa_toy_private_exponent(const Nat& p, const Nat& q, const Nat& e);

}  // namespace egcd
