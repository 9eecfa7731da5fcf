#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "factorchain/rational.hpp"

namespace factorchain {

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int powmod(const Int& base, const Int& e, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// sigma(p^a) = 1 + p + ... + p^a, computed exactly as (p^(a+1) - 1)/(p - 1).
inline Int sigma_prime_power(const Int& p, const Exponent& a) {
    if (a.is_infinite())
        throw std::domain_error("sigma_prime_power: infinite exponent");
    if (p < 2)
        throw std::domain_error("sigma_prime_power: p must be at least 2");
    Int num = pow_ui(p, a.value() + 1) - 1;
    Int r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), Int(p - 1).get_mpz_t());
    return r;
}

// sigma_{-1}(p^a) = sigma(p^a)/p^a.
inline Rat sigma_ratio(const Int& p, unsigned long a) {
    return make_rational(sigma_prime_power(p, a), pow_ui(p, a));
}

// sigma_{-1}(p^inf) = p/(p - 1), the supremum of sigma_{-1}(p^a) over a.
inline Rat abundancy_limit(const Int& p) {
    if (p < 2)
        throw std::domain_error("abundancy_limit: p must be at least 2");
    return make_rational(p, p - 1);
}

// Abundancy index of the number with the given factorization. Exponents
// must be finite; primes must be pairwise distinct.
inline Rat abundancy(std::span<const PrimePower> fz) {
    for (size_t i = 0; i < fz.size(); ++i)
        for (size_t j = i + 1; j < fz.size(); ++j)
            if (fz[i].p == fz[j].p)
                throw std::invalid_argument("abundancy: duplicate prime " +
                                            fz[i].p.get_str());
    Rat r(1);
    for (const auto& pp : fz) {
        if (pp.a.is_infinite())
            throw std::domain_error("abundancy: infinite exponent");
        r *= sigma_ratio(pp.p, pp.a.value());
    }
    return r;
}

inline Rat abundancy(std::initializer_list<PrimePower> fz) {
    return abundancy(std::span<const PrimePower>(fz.begin(), fz.size()));
}

// v_p(x) for nonzero integers: the exponent of p in x.
inline long valuation(const Int& x, const Int& p) {
    if (x == 0)
        throw std::domain_error("valuation: zero argument");
    if (p < 2)
        throw std::domain_error("valuation: p must be at least 2");
    Int rest;
    return static_cast<long>(
        mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

// v_p extended to rationals: v_p(num) - v_p(den). May be negative.
inline long valuation(const Rat& x, const Int& p) {
    if (x == 0)
        throw std::domain_error("valuation: zero argument");
    return valuation(Int(x.get_num()), p) - valuation(Int(x.get_den()), p);
}

// Smallest c >= 1 with m^c = 1 mod n. Requires gcd(m, n) = 1. Costs one
// modular multiplication per step, i.e. O(order) work; every caller in
// this library has order <= n - 1 with n small.
inline Int multiplicative_order(const Int& m, const Int& n) {
    if (n < 2)
        throw std::domain_error("multiplicative_order: modulus must be >= 2");
    if (gcd(m, n) != 1)
        throw std::domain_error("multiplicative_order: arguments not coprime");
    Int acc = m % n;
    if (acc < 0)
        acc += n;
    Int c = 1;
    while (acc != 1) {
        acc = acc * m % n;
        if (acc < 0)
            acc += n;
        ++c;
        if (c >= n)
            throw std::logic_error("multiplicative_order: no order found");
    }
    return c;
}

// Smallest e >= 0 with base^e >= x, by exact integer powering. Never uses
// a floating-point logarithm. For x > 1 this is ceil(log_base(x)).
inline unsigned long ceil_log(const Int& base, const Rat& x) {
    if (base < 2)
        throw std::domain_error("ceil_log: base must be at least 2");
    if (x <= 0)
        throw std::domain_error("ceil_log: x must be positive");
    Int pw = 1;
    unsigned long e = 0;
    while (Rat(pw) < x) {
        pw *= base;
        ++e;
    }
    return e;
}

inline unsigned long ceil_log(const Int& base, const Int& x) {
    return ceil_log(base, Rat(x));
}

}  // namespace factorchain
