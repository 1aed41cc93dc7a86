#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace egcd {

/// Negative operand, malformed literal, or a violated operation precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by the modular layer when gcd(a mod m, m) != 1.
class NonInvertible : public std::domain_error {
public:
    explicit NonInvertible(mpz_class gcd)
        : std::domain_error("not invertible: gcd=" + gcd.get_str()), gcd_(std::move(gcd)) {}

    const mpz_class& gcd() const noexcept { return gcd_; }

private:
    mpz_class gcd_;
};

class OracleBoundExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class MalformedTrace : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ResourceExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace egcd
