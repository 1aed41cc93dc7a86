#include "doctest.h"

#include <random>

#include "egcd/modular.hpp"
#include "egcd/sweep.hpp"

using namespace egcd;

TEST_CASE("Modulus") {
    CHECK_THROWS_AS(Modulus(Nat(0)), InvalidInput);
    CHECK(Modulus(Nat(1)).value() == Nat(1));
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(3, Modulus(11)) == Nat(4));
    for (unsigned m = 2; m < 50; ++m) CHECK(mod_inverse(1, Modulus(m)) == Nat(1));
    CHECK(mod_inverse(5, Modulus(1)) == Nat(0));
    CHECK(mod_inverse(0, Modulus(1)) == Nat(0));
    // a is reduced first: 14 = 3 (mod 11).
    CHECK(mod_inverse(14, Modulus(11)) == Nat(4));

    try {
        mod_inverse(6, Modulus(9));
        FAIL("expected NonInvertible");
    } catch (const NonInvertible& e) {
        CHECK(e.gcd() == 3);
        CHECK(std::string(e.what()) == "not invertible: gcd=3");
    }
    CHECK_THROWS_AS(mod_inverse(0, Modulus(7)), NonInvertible);
}

TEST_CASE("mod_inverse agrees with exhaustive search for m <= 120") {
    for (std::uint64_t m = 2; m <= 120; ++m) {
        for (std::uint64_t a = 0; a < 2 * m; ++a) {
            const auto expected = oracle_inverse(a, m);
            if (expected) {
                REQUIRE(mod_inverse(Nat(a), Modulus(Nat(m))) == Nat(*expected));
            } else {
                REQUIRE_THROWS_AS(mod_inverse(Nat(a), Modulus(Nat(m))), NonInvertible);
            }
        }
    }
}

TEST_CASE("mod_inverse at 2048 bits against a prime modulus") {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(2048);
    mpz_class p = rng.get_z_bits(2048);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    const Modulus m{Nat(p)};
    for (int i = 0; i < 20; ++i) {
        mpz_class a = rng.get_z_bits(2048);
        if (sgn(mpz_class(a % p)) == 0) continue;
        const Nat v = mod_inverse(Nat(a), m);
        CHECK(v < m.value());
        CHECK(mpz_class(a * v.mpz() % p) == 1);
    }
}

TEST_CASE("rsa_toy_private_exponent") {
    const Nat d = rsa_toy_private_exponent(61, 53, 17);
    CHECK(d == Nat(2753));
    CHECK((17u * d.to_ulong()) % 3120u == 1u);
    CHECK(rsa_toy_private_exponent(3, 5, 3) == Nat(3));
    CHECK_THROWS_AS(rsa_toy_private_exponent(5, 5, 3), InvalidInput);
    CHECK_THROWS_AS(rsa_toy_private_exponent(1, 5, 3), InvalidInput);
    CHECK_THROWS_AS(rsa_toy_private_exponent(61, 53, 3), NonInvertible);  // gcd(3, 3120) = 3
}
