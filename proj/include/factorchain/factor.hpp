#pragma once

#include <cstdint>

#include "factorchain/factorization.hpp"

namespace factorchain {

namespace detail {

// 2/3/5 wheel increments, starting from 7.
inline constexpr unsigned long kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t n) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

// Brent's cycle variant with batched gcds. Gives up after max_iters
// squarings so a chunk whose smallest factor is out of reach terminates
// instead of chasing an astronomically long cycle. Returns a nontrivial
// factor of composite n, or n on cycle failure, or 1 on budget
// exhaustion.
inline uint64_t brent_rho_u64(uint64_t n, uint64_t x0, uint64_t c,
                              uint64_t max_iters) {
    if (n % 2 == 0)
        return 2;
    uint64_t y = x0 % n, r = 1, q = 1, g = 1, x = 0, ys = 0, used = 0;
    const uint64_t batch = 128;
    while (g == 1) {
        if (used >= max_iters)
            return 1;
        x = y;
        for (uint64_t i = 0; i < r; ++i)
            y = (mulmod_u64(y, y, n) + c) % n;
        uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            uint64_t lim = std::min(batch, r - k);
            for (uint64_t i = 0; i < lim; ++i) {
                y = (mulmod_u64(y, y, n) + c) % n;
                q = mulmod_u64(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            k += batch;
        }
        used += 2 * r;
        r *= 2;
    }
    if (g == n) {
        do {
            ys = (mulmod_u64(ys, ys, n) + c) % n;
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

inline Int brent_rho_mpz(const Int& n, uint64_t x0, uint64_t c,
                         uint64_t max_iters) {
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    Int y(static_cast<unsigned long>(x0)), x, ys, q(1), g(1), cc(static_cast<unsigned long>(c));
    y %= n;
    uint64_t r = 1, used = 0;
    const uint64_t batch = 128;
    while (g == 1) {
        if (used >= max_iters)
            return 1;
        x = y;
        for (uint64_t i = 0; i < r; ++i)
            y = (y * y + cc) % n;
        uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            uint64_t lim = std::min(batch, r - k);
            for (uint64_t i = 0; i < lim; ++i) {
                y = (y * y + cc) % n;
                q = q * abs(x - y) % n;
            }
            g = gcd(q, n);
            k += batch;
        }
        used += 2 * r;
        r *= 2;
    }
    if (g == n) {
        do {
            ys = (ys * ys + cc) % n;
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g;
}

// Splits a composite, non-prime-power n. Parameters and the iteration
// budget are a fixed function of the attempt index, so results are
// reproducible across runs and threads. The overall budget (~1e8
// squarings) reliably reaches 15-digit factors; beyond that the chunk is
// left to the caller (cofactor / FactorDB tier). Returns 1 on failure.
inline Int split_composite(const Int& n) {
    uint64_t budget = uint64_t(1) << 27;
    for (unsigned attempt = 0; attempt < 64 && budget > 0; ++attempt) {
        uint64_t h = splitmix64(0x66616374ULL + attempt);
        uint64_t x0 = 2 + (h & 0xffff);
        uint64_t c = 1 + (h >> 32) % 0xffff;
        uint64_t cap = std::min(budget, uint64_t(1) << (20 + 2 * std::min(attempt, 3u)));
        budget -= std::min(budget, cap);
        Int g;
        if (n.fits_ulong_p()) {
            uint64_t f = brent_rho_u64(n.get_ui(), x0, c, cap);
            g = Int(static_cast<unsigned long>(f));
        } else {
            g = brent_rho_mpz(n, x0, c, cap);
        }
        if (g != 1 && g != n)
            return g;
    }
    return 1;
}

}  // namespace detail

// Trial division by all primes <= limit (full multiplicity). The result
// is complete iff the remaining cofactor is 1 or a certified prime at
// most limit^2, in which case the cofactor is promoted into the factor
// list; a partial result's cofactor has no prime factor <= limit.
inline Factorization trial_division(const Int& n, unsigned long limit) {
    if (n < 1)
        throw std::invalid_argument("trial_division: n must be positive");
    if (limit < 2)
        throw std::invalid_argument("trial_division: limit must be at least 2");
    Factorization f;
    f.n = n;
    f.source = FactorSource::trial;
    Int m = n;

    auto strip = [&](unsigned long d) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), d))
            return;
        unsigned long e = 0;
        do {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
            ++e;
        } while (mpz_divisible_ui_p(m.get_mpz_t(), d));
        f.factors.emplace_back(Int(d), e);
    };

    for (unsigned long d : {2ul, 3ul, 5ul})
        if (d <= limit)
            strip(d);

    // Stop early once d^2 exceeds the remaining cofactor: it is then 1 or
    // prime. sqrt is recomputed only when a factor comes out.
    auto sqrt_cap = [&]() -> unsigned long {
        Int root;
        mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
        if (!root.fits_ulong_p())
            return ~0ul;
        return root.get_ui();
    };
    unsigned long cap = sqrt_cap();
    unsigned long d = 7;
    int w = 0;
    while (d <= limit && d <= cap && m > 1) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            strip(d);
            cap = sqrt_cap();
        }
        d += detail::kWheel[w];
        w = (w + 1) & 7;
    }

    f.cofactor = m;
    if (m == 1) {
        f.status = FactorStatus::complete;
    } else {
        Int limit_sq = Int(limit) * limit;
        if (m <= limit_sq && is_prime(m)) {
            f.factors.emplace_back(m, 1);
            f.cofactor = 1;
            f.status = FactorStatus::complete;
        } else {
            f.status = FactorStatus::partial;
        }
    }
    detail::sort_and_merge(f.factors);
    verify_factorization(f);
    return f;
}

// General-purpose factoring of m (Pollard rho, Brent variant) with
// deterministic parameters. Prime and perfect-power chunks are handled
// directly. On the (never yet observed) failure of all rho attempts the
// unsplit chunk stays in the cofactor and the result is partial.
inline Factorization factor_general(const Int& m) {
    if (m < 1)
        throw std::invalid_argument("factor_general: n must be positive");
    Factorization f;
    f.n = m;
    f.source = FactorSource::general;
    f.cofactor = 1;
    std::vector<std::pair<Int, unsigned long>> work;
    if (m > 1)
        work.emplace_back(m, 1);
    while (!work.empty()) {
        auto [c, mult] = work.back();
        work.pop_back();
        if (c == 1)
            continue;
        if (is_prime(c)) {
            f.factors.emplace_back(c, mult);
            continue;
        }
        for (unsigned long d : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
            unsigned long e = 0;
            while (mpz_divisible_ui_p(c.get_mpz_t(), d)) {
                mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), d);
                ++e;
            }
            if (e)
                f.factors.emplace_back(Int(d), e * mult);
        }
        if (c == 1)
            continue;
        if (is_prime(c)) {
            f.factors.emplace_back(c, mult);
            continue;
        }
        if (mpz_perfect_power_p(c.get_mpz_t())) {
            unsigned long bits = mpz_sizeinbase(c.get_mpz_t(), 2);
            bool rooted = false;
            for (unsigned long e = 2; e <= bits && !rooted; ++e) {
                Int root;
                if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), e) != 0) {
                    work.emplace_back(root, mult * e);
                    rooted = true;
                }
            }
            if (rooted)
                continue;
        }
        Int g = detail::split_composite(c);
        if (g == 1) {
            // rho gave up; leave the chunk unfactored
            f.cofactor *= pow_ui(c, mult);
            continue;
        }
        work.emplace_back(g, mult);
        work.emplace_back(c / g, mult);
    }
    f.status = f.cofactor == 1 ? FactorStatus::complete : FactorStatus::partial;
    detail::sort_and_merge(f.factors);
    verify_factorization(f);
    return f;
}

}  // namespace factorchain
