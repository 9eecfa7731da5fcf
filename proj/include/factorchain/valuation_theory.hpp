#pragma once

#include <map>
#include <mutex>
#include <set>

#include "factorchain/oracle.hpp"

namespace factorchain {

// Largest j with x^e = 1 mod p^j, i.e. v_p(x^e - 1) when p | x^e - 1.
// Works modulo growing powers of p, never constructing x^e.
inline long valuation_of_power_minus_one(const Int& x, const Int& e, const Int& p) {
    long j = 0;
    Int mod = p;
    while (powmod(x, e, mod) == 1) {
        ++j;
        mod *= p;
    }
    return j;
}

// v_p((x^(a+1) - 1)/(x - 1)) for an odd prime p not dividing x, by the
// three-case valuation formula:
//   p | x - 1:                 v_p(a + 1)
//   o_p(x) | a + 1 otherwise:  v_p(x^o_p(x) - 1) + v_p(a + 1)
//   o_p(x) does not divide:    0
inline long val_sigma_at_prime(const Int& x, unsigned long a, const Int& p) {
    if (x <= 1)
        throw std::invalid_argument("val_sigma_at_prime: x must exceed 1");
    if (a == 0)
        throw std::invalid_argument("val_sigma_at_prime: a must be positive");
    if (p == 2)
        throw std::invalid_argument("val_sigma_at_prime: p must be odd");
    if (!is_prime(p))
        throw std::invalid_argument("val_sigma_at_prime: p must be prime");
    if (x % p == 0)
        throw std::invalid_argument("val_sigma_at_prime: p divides x");
    Int a1(a + 1);
    if ((x - 1) % p == 0)
        return valuation(a1, p);
    Int o = multiplicative_order(x, p);
    if (a1 % o != 0)
        return 0;
    return valuation_of_power_minus_one(x, o, p) + valuation(a1, p);
}

// f_r(q) = v_r(q^(o_r(q)) - 1) when gcd(r, q(q-1)) = 1, else 0. Memoized;
// the table is shared and lock-protected.
inline long f_special(const Int& q, const Int& r) {
    static std::mutex mu;
    static std::map<std::pair<std::string, std::string>, long> memo;
    auto key = std::make_pair(q.get_str(), r.get_str());
    {
        std::lock_guard lock(mu);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    long value = 0;
    if (q != r && (q - 1) % r != 0) {
        Int o = multiplicative_order(q, r);
        value = valuation_of_power_minus_one(q, o, r);
    }
    std::lock_guard lock(mu);
    memo.emplace(key, value);
    return value;
}

// The special-prime exponent gate: v_r(n) <= (k - 1)^2 + s is consistent,
// anything larger prunes the branch.
inline bool special_exponent_ok(unsigned long exp_r, long k, const Int& s) {
    if (k < 2)
        throw std::invalid_argument("special_exponent_ok: requires k >= 2");
    return Int(exp_r) <= Int(k - 1) * (k - 1) + s;
}

// sigma(p^a) has a prime factor q with o_q(p) = d, for every divisor
// d > 1 of a + 1 (p odd prime, a even). Finding it requires factoring
// sigma(p^a) under the active policy; an incomplete factorization is
// reported as inability, distinct from mathematical nonexistence, which
// would falsify the underlying theorem and aborts loudly.
struct WitnessResult {
    enum class Status { found, factorization_incomplete };
    Status status = Status::factorization_incomplete;
    Int witness;
    Factorization fz;
};

inline WitnessResult primitive_order_witness(const Int& p, unsigned long a,
                                             unsigned long d,
                                             const FactorOracle& oracle) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("primitive_order_witness: p must be an odd prime");
    if (a == 0 || a % 2 != 0)
        throw std::invalid_argument("primitive_order_witness: a must be even positive");
    if (d <= 1 || (a + 1) % d != 0)
        throw std::invalid_argument("primitive_order_witness: d must divide a+1, d > 1");
    Factorization fz = oracle.factor(sigma_prime_power(p, a));
    if (!fz.complete())
        return {WitnessResult::Status::factorization_incomplete, Int(0), fz};
    for (const auto& [q, e] : fz.factors) {
        // q | sigma(p^a) | p^(a+1) - 1, so o_q(p) | a + 1: the order loop
        // stays short.
        if (multiplicative_order(p, q) == d)
            return {WitnessResult::Status::found, q, fz};
    }
    throw std::logic_error(
        "primitive_order_witness: no factor of sigma(" + p.get_str() + "^" +
        std::to_string(a) + ") has order " + std::to_string(d) +
        "; this contradicts a theorem this search relies on");
}

// Certifies: for every x coprime to p with 1 < x <= p^A,
//   v_p(x^(p-1) - 1) <= ceil(log_p x) + delta.
// Checked by the contrapositive over Hensel-lifted (p-1)-th roots of
// unity: for each v and each y in [2, p-1], the unique root congruent to
// y mod p is z = y^(p^(v-1)) mod p^v; the claim fails exactly when some
// such z satisfies 1 < z <= p^(v - delta - 1). This avoids enumerating
// all x <= p^A, which is infeasible for moduli like 31^14.
inline bool certify_ceil_log(const Int& p, unsigned long A, unsigned long delta) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("certify_ceil_log: p must be an odd prime");
    if (A == 0)
        throw std::invalid_argument("certify_ceil_log: A must be positive");
    // Work scales with p * (A + delta); a 33-digit p is not checkable
    // this way and is rejected rather than attempted.
    if (!p.fits_ulong_p() || Int(p) * (A + delta + 1) > 1'000'000'000 ||
        A + delta + 1 > 128)
        throw std::invalid_argument(
            "certify_ceil_log: parameters too large for root enumeration");
    for (unsigned long v = 2; v <= A + delta + 1; ++v) {
        if (v < delta + 2)
            continue;  // bound p^(v-delta-1) <= 1 admits no z > 1
        Int modulus = pow_ui(p, v);
        Int bound = pow_ui(p, v - delta - 1);
        Int lift_exp = pow_ui(p, v - 1);
        for (Int y(2); y < p; ++y) {
            Int z = powmod(y, lift_exp, modulus);
            if (z > 1 && z <= bound)
                return false;
        }
    }
    return true;
}

// (r, L = r^L_exponent, delta) for special-prime exponent pruning: r must
// not divide the target's abundancy, and the (L, delta) pair must be
// certified by certify_ceil_log before a search run may use it.
struct SpecialPrimeSpec {
    Int r;
    unsigned long L_exponent = 0;
    unsigned long delta = 0;

    Int L() const { return pow_ui(r, L_exponent); }
};

// Process-wide record of certified (r, L_exponent, delta) triples.
class CertificationRegistry {
public:
    static CertificationRegistry& instance() {
        static CertificationRegistry reg;
        return reg;
    }

    bool is_certified(const SpecialPrimeSpec& s) const {
        std::lock_guard lock(mu_);
        return certified_.count(key(s)) > 0;
    }

    // Runs the certification if this triple has not been seen; returns
    // whether it holds.
    bool ensure(const SpecialPrimeSpec& s) {
        if (is_certified(s))
            return true;
        bool ok = certify_ceil_log(s.r, s.L_exponent, s.delta);
        if (ok) {
            std::lock_guard lock(mu_);
            certified_.insert(key(s));
        }
        return ok;
    }

private:
    static std::string key(const SpecialPrimeSpec& s) {
        return s.r.get_str() + "^" + std::to_string(s.L_exponent) + "+" +
               std::to_string(s.delta);
    }

    mutable std::mutex mu_;
    std::set<std::string> certified_;
};

}  // namespace factorchain
