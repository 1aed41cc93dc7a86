#include "egcd/modular.hpp"

#include "egcd/core.hpp"

namespace egcd {

Modulus::Modulus(Nat m) : m_(std::move(m)) {
    if (m_.is_zero()) throw InvalidInput("modulus must be >= 1");
}

Nat mod_inverse(const Nat& a, const Modulus& m) {
    const mpz_class& mod = m.value().mpz();
    const Nat reduced(mpz_class(a.mpz() % mod));
    // Order (a mod m, m) has a < m, so the first step only swaps.
    BezoutTriple t = egcd_iterative(reduced, m.value());
    if (mod == 1) return Nat(0);
    if (t.d != Nat(1)) throw NonInvertible(t.d.mpz());
    mpz_class v;
    mpz_mod(v.get_mpz_t(), t.x.mpz().get_mpz_t(), mod.get_mpz_t());
    return Nat(std::move(v));
}

Nat rsa_toy_private_exponent(const Nat& p, const Nat& q, const Nat& e) {
    if (p < Nat(2) || q < Nat(2)) throw InvalidInput("rsa: p and q must be >= 2");
    if (p == q) throw InvalidInput("rsa: p and q must be distinct");
    const mpz_class phi = (p.mpz() - 1) * (q.mpz() - 1);
    return mod_inverse(e, Modulus(Nat(phi)));
}

}  // namespace egcd
