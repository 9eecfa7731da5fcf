#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace factorchain {

// Arbitrary-precision integers and exact rationals. mpq_class values are
// kept canonical (reduced, positive denominator) by every constructor and
// operator we use; make_rational is the one entry point for raw num/den
// pairs. No floating-point representation is ever consulted for a
// comparison that affects control flow.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rational(const Int& num, const Int& den) {
    if (den == 0)
        throw std::domain_error("make_rational: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "num/den" or a plain integer. Used by config files and the CLI.
inline Rat parse_rational(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("parse_rational: empty string");
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
    if (q.get_den() == 0)
        throw std::domain_error("parse_rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

// Always the explicit "num/den" form, so serialized values round-trip
// byte-identically regardless of whether the value is an integer.
inline std::string rational_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Int parse_int(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("parse_int: empty string");
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_int: bad integer '" + s + "'");
    }
}

// A prime-power exponent: either a finite nonnegative integer or the
// symbolic infinite marker used by abundancy-limit computations. A
// distinct variant rather than a sentinel value, so sigma() can reject
// infinite exponents by type-level accident rather than by magic number.
struct inf_exponent_t {};
inline constexpr inf_exponent_t inf_exponent{};

class Exponent {
public:
    Exponent(unsigned long v) : finite_(v) {}            // NOLINT(runtime/explicit)
    Exponent(inf_exponent_t) : finite_(std::nullopt) {}  // NOLINT(runtime/explicit)

    bool is_infinite() const { return !finite_.has_value(); }
    unsigned long value() const {
        if (!finite_)
            throw std::domain_error("Exponent: infinite exponent has no value");
        return *finite_;
    }
    bool operator==(const Exponent& o) const { return finite_ == o.finite_; }

private:
    std::optional<unsigned long> finite_;
};

struct PrimePower {
    Int p;
    Exponent a;

    PrimePower(Int prime, Exponent exp) : p(std::move(prime)), a(exp) {}
};

}  // namespace factorchain
