#pragma once

#include <optional>
#include <vector>

#include "factorchain/arith.hpp"

namespace factorchain {

// Known part of a candidate factorization, split into primes whose
// exponents are known exactly and primes with lower-bound exponents only.
struct BoundContext {
    Rat t_min;
    Rat t_max;
    long k = 0;
    std::vector<PrimePower> exact_part;  // exponents known exactly
    std::vector<PrimePower> floor_part;  // exponents are lower bounds

    long k1() const {
        return static_cast<long>(exact_part.size() + floor_part.size());
    }

    void validate() const {
        if (!(Rat(1) < t_min) || !(t_min <= t_max))
            throw std::invalid_argument("bounds: need 1 < t_min <= t_max");
        if (k1() >= k)
            throw std::invalid_argument("bounds: need k1 < k");
        std::vector<Int> seen;
        for (const auto* part : {&exact_part, &floor_part})
            for (const auto& pp : *part) {
                if (pp.a.is_infinite() || pp.a.value() == 0)
                    throw std::invalid_argument("bounds: exponents must be finite positive");
                for (const auto& q : seen)
                    if (q == pp.p)
                        throw std::invalid_argument("bounds: duplicate prime " +
                                                    pp.p.get_str());
                seen.push_back(pp.p);
            }
    }
};

// M = t_max / (prod_exact sigma_-1(p^a) * prod_floor sigma_-1(p^b)),
// m = t_min / (prod_exact sigma_-1(p^a) * prod_floor sigma_-1(p^inf)).
// M bounds the abundancy still unaccounted for from above, m from below.
inline std::pair<Rat, Rat> compute_M_m(const BoundContext& ctx) {
    ctx.validate();
    Rat den_M(1), den_m(1);
    for (const auto& pp : ctx.exact_part) {
        Rat r = sigma_ratio(pp.p, pp.a.value());
        den_M *= r;
        den_m *= r;
    }
    for (const auto& pp : ctx.floor_part) {
        den_M *= sigma_ratio(pp.p, pp.a.value());
        den_m *= abundancy_limit(pp.p);
    }
    return {ctx.t_max / den_M, ctx.t_min / den_m};
}

// Lower bound on the next unknown prime. With squared = false this is the
// non-strict bound 1/(M-1); with squared = true it is the strict bound
//   B_low = 1/(M-1) * 8/((2-M)^2 + 7),
// valid when the next prime's exponent is at least 2. The extra factor
// exceeds 1 exactly for 1 < M < 3.
inline Rat b_low(const Rat& M, bool squared) {
    if (M <= 1)
        throw std::domain_error("b_low: requires M > 1");
    Rat base = Rat(1) / (M - 1);
    if (!squared)
        return base;
    Rat d = Rat(2) - M;
    return base * Rat(8) / (d * d + 7);
}

// Strict upper bound B_high = 1 + (k - k1)/(m - 1) on the next unknown
// prime. No upper bound exists when m <= 1.
inline Rat b_high(const Rat& m, long k, long k1) {
    if (m <= 1)
        throw std::domain_error("b_high: requires m > 1");
    if (k1 >= k)
        throw std::invalid_argument("b_high: requires k1 < k");
    return Rat(1) + Rat(k - k1) / (m - 1);
}

// Strict upper bound g(A) = 1 + (k - k1 - 1)/(m(A-1)/A - 1) on the
// second-next unknown prime, valid for 1 < A <= p_{k1+1} when the next
// prime's exponent is at least 2. Strictly decreasing in A.
inline Rat g_second_prime(const Rat& m, long k, long k1, const Rat& A) {
    if (k1 + 2 > k)
        throw std::invalid_argument("g_second_prime: requires k1 + 2 <= k");
    if (A <= 1)
        throw std::domain_error("g_second_prime: requires A > 1");
    Rat scaled = m * (A - 1) / A;
    if (scaled <= 1)
        throw std::domain_error("g_second_prime: requires m(A-1)/A > 1");
    return Rat(1) + Rat(k - k1 - 1) / (scaled - 1);
}

// Open search interval (low, high) for the next prime; high is absent
// when m <= 1. Both ends use the strict bounds: every prime the search
// introduces carries exponent >= 2, so the squared form of b_low applies.
struct PrimeWindow {
    Rat M;
    Rat m;
    Rat low;
    std::optional<Rat> high;

    bool searchable() const { return high.has_value() && low < *high; }
};

inline PrimeWindow prime_window(const Rat& M, const Rat& m, long k, long k1,
                                const Int& P) {
    PrimeWindow w{M, m, Rat(P), std::nullopt};
    Rat low = b_low(M, true);
    if (low > w.low)
        w.low = low;
    if (m > 1)
        w.high = b_high(m, k, k1);
    return w;
}

}  // namespace factorchain
