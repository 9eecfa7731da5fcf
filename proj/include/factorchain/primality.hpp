#pragma once

#include <array>

#include "factorchain/arith.hpp"

namespace factorchain {

enum class Primality { composite, prime, probable_prime };

namespace detail {

// Strong-pseudoprime test to base a for odd n > 2 with n - 1 = 2^s * d.
inline bool strong_probable_prime(const Int& n, const Int& d, unsigned long s,
                                  unsigned long a) {
    Int base(a);
    base %= n;
    if (base == 0)
        return true;
    Int x = powmod(base, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1)
            return true;
    }
    return false;
}

// Below this limit the fixed base set is a proven deterministic witness
// set (first 13 primes, valid up to 3.317e24).
inline const Int& deterministic_limit() {
    static const Int limit("3317044064679887385961981");
    return limit;
}

}  // namespace detail

// Deterministic for n < 3.317e24 via fixed-base strong-pseudoprime tests;
// beyond that the same bases plus extras give a strong probabilistic
// verdict, reported as probable_prime.
inline Primality classify_prime(const Int& n) {
    if (n < 2)
        return Primality::composite;
    static constexpr std::array<unsigned long, 13> kBases = {
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned long b : kBases) {
        if (n == b)
            return Primality::prime;
        if (n % b == 0)
            return Primality::composite;
    }
    Int d = n - 1;
    unsigned long s = static_cast<unsigned long>(
        mpz_scan1(d.get_mpz_t(), 0));
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned long b : kBases)
        if (!detail::strong_probable_prime(n, d, s, b))
            return Primality::composite;
    if (n < detail::deterministic_limit())
        return Primality::prime;
    static constexpr std::array<unsigned long, 12> kExtraBases = {
        43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (unsigned long b : kExtraBases)
        if (!detail::strong_probable_prime(n, d, s, b))
            return Primality::composite;
    return Primality::probable_prime;
}

inline bool is_prime(const Int& n) {
    return classify_prime(n) != Primality::composite;
}

// Next prime strictly greater than x, with our own primality check layered
// over the candidate generator so nothing weaker than classify_prime
// decides what counts as prime.
inline Int next_prime_above(const Int& x) {
    Int c = x;
    for (;;) {
        mpz_nextprime(c.get_mpz_t(), c.get_mpz_t());
        if (is_prime(c))
            return c;
    }
}

}  // namespace factorchain
