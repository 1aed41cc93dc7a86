#include "egcd/numbers.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace egcd {

namespace {

bool all_of_class(std::string_view s, int (*pred)(int)) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [pred](char ch) {
        return pred(static_cast<unsigned char>(ch)) != 0;
    });
}

mpz_class from_digits(std::string_view digits, int base) {
    mpz_class out;
    if (out.set_str(std::string(digits), base) != 0) {
        throw InvalidInput("malformed integer literal '" + std::string(digits) + "'");
    }
    return out;
}

}  // namespace

Int Int::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_of_class(body, ::isdigit)) {
        throw InvalidInput("malformed integer literal '" + std::string(text) + "'");
    }
    mpz_class v = from_digits(body, 10);
    if (negative) v = -v;
    return Int(std::move(v));
}

Nat::Nat(mpz_class v) : v_(std::move(v)) {
    if (sgn(v_) < 0) {
        throw InvalidInput("Nat: value must be non-negative, got " + v_.get_str());
    }
}

Nat Nat::parse(std::string_view text) {
    if (!text.empty() && text.front() == '-') {
        throw InvalidInput("'" + std::string(text) + "': operands must be non-negative integers");
    }
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        std::string_view hex = text.substr(2);
        if (!all_of_class(hex, ::isxdigit)) {
            throw InvalidInput("malformed hexadecimal literal '" + std::string(text) + "'");
        }
        return Nat(from_digits(hex, 16));
    }
    if (!all_of_class(text, ::isdigit)) {
        throw InvalidInput("malformed integer literal '" + std::string(text) +
                           "' (expected decimal digits or 0x-prefixed hex)");
    }
    return Nat(from_digits(text, 10));
}

std::size_t Nat::bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
}

unsigned long Nat::to_ulong() const {
    if (!fits_ulong()) throw InvalidInput("Nat: value does not fit in unsigned long");
    return v_.get_ui();
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.mpz(); }
std::ostream& operator<<(std::ostream& os, const Nat& v) { return os << v.mpz(); }

}  // namespace egcd
