#pragma once

#include <memory>

#include "factorchain/cache.hpp"
#include "factorchain/factor.hpp"
#include "factorchain/factordb.hpp"

namespace factorchain {

struct FactorPolicy {
    unsigned long trial_limit = 1'000'000;
    bool allow_general = true;
    FactorDbMode factordb = FactorDbMode::off;
    std::optional<std::filesystem::path> cache_path;
};

// Tier chain: cache, trial division, general-purpose factoring, FactorDB.
// A partial cache hit skips the trial tier (its factors already absorbed
// one) and continues with the remaining cofactor. A FactorDB failure
// degrades to whatever the earlier tiers produced and is recorded in the
// result's notes, never treated as "no factors".
class FactorOracle {
public:
    explicit FactorOracle(FactorPolicy policy = {},
                          std::shared_ptr<FactorCache> cache = nullptr,
                          FactorDbClient db = {})
        : policy_(std::move(policy)), cache_(std::move(cache)), db_(std::move(db)) {
        if (!cache_) {
            if (policy_.cache_path)
                cache_ = std::make_shared<FactorCache>(*policy_.cache_path);
            else
                cache_ = std::make_shared<FactorCache>();
        }
    }

    const FactorPolicy& policy() const { return policy_; }
    FactorCache& cache() const { return *cache_; }
    std::shared_ptr<FactorCache> cache_ptr() const { return cache_; }

    // Same cache and FactorDB client, different tier policy.
    FactorOracle with_policy(FactorPolicy p) const {
        return FactorOracle(std::move(p), cache_, db_);
    }

    Factorization factor(const Int& n) const {
        if (n < 1)
            throw std::invalid_argument("factor: n must be positive");
        Factorization result;
        result.n = n;
        result.cofactor = n;
        result.status = n == 1 ? FactorStatus::complete : FactorStatus::partial;
        if (n == 1) {
            result.cofactor = 1;
            return result;
        }

        bool from_cache = false;
        if (auto hit = cache_->lookup(n)) {
            if (hit->complete()) {
                hit->source = FactorSource::cache;
                return *hit;
            }
            result = *hit;
            from_cache = true;
        }

        FactorSource tier = from_cache ? FactorSource::cache : FactorSource::trial;
        if (!from_cache) {
            Factorization t = trial_division(result.cofactor, policy_.trial_limit);
            merge_into(result, t);
        }
        promote_prime_cofactor(result);

        if (!result.complete() && policy_.allow_general) {
            Factorization g = factor_general(result.cofactor);
            if (!g.factors.empty())
                tier = FactorSource::general;
            merge_into(result, g);
            promote_prime_cofactor(result);
        }

        if (!result.complete() && policy_.factordb != FactorDbMode::off) {
            FactorDbResult r = db_.lookup(result.cofactor, policy_.factordb);
            switch (r.state) {
                case FactorDbResult::State::ok:
                    if (!r.fz.factors.empty())
                        tier = FactorSource::factordb;
                    merge_into(result, r.fz);
                    promote_prime_cofactor(result);
                    break;
                case FactorDbResult::State::unknown:
                    result.notes.push_back("factordb: unknown (" + r.message + ")");
                    break;
                case FactorDbResult::State::error:
                    result.notes.push_back("factordb: degraded (" + r.message + ")");
                    break;
            }
        }

        result.source = tier;
        verify_factorization(result);
        if (!from_cache || !result.same_content(*cache_->lookup(n)))
            cache_->store(result);
        return result;
    }

    // sigma(p^a) comes up for the same (p, a) across many branches; the
    // cache absorbs the recomputation.
    Factorization factor_sigma(const Int& p, unsigned long a) const {
        return factor(sigma_prime_power(p, a));
    }

private:
    static void promote_prime_cofactor(Factorization& f) {
        if (f.cofactor == 1) {
            f.status = FactorStatus::complete;
            return;
        }
        switch (classify_prime(f.cofactor)) {
            case Primality::prime:
                break;
            case Primality::probable_prime:
                f.probable_primality = true;
                break;
            case Primality::composite:
                f.status = FactorStatus::partial;
                return;
        }
        f.factors.emplace_back(f.cofactor, 1);
        f.cofactor = 1;
        f.status = FactorStatus::complete;
        detail::sort_and_merge(f.factors);
    }

    // Folds sub's factors (a factorization of result's cofactor) into
    // result.
    static void merge_into(Factorization& result, const Factorization& sub) {
        for (const auto& [p, e] : sub.factors)
            result.factors.emplace_back(p, e);
        result.cofactor = sub.cofactor;
        result.probable_primality |= sub.probable_primality;
        for (const auto& note : sub.notes)
            result.notes.push_back(note);
        result.status =
            result.cofactor == 1 ? FactorStatus::complete : FactorStatus::partial;
        detail::sort_and_merge(result.factors);
    }

    FactorPolicy policy_;
    std::shared_ptr<FactorCache> cache_;
    FactorDbClient db_;
};

}  // namespace factorchain
