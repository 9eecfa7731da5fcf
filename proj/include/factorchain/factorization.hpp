#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "factorchain/primality.hpp"

namespace factorchain {

enum class FactorStatus { complete, partial };
enum class FactorSource { trial, general, cache, factordb };

inline const char* to_string(FactorStatus s) {
    return s == FactorStatus::complete ? "complete" : "partial";
}

inline const char* to_string(FactorSource s) {
    switch (s) {
        case FactorSource::trial: return "trial";
        case FactorSource::general: return "general";
        case FactorSource::cache: return "cache";
        case FactorSource::factordb: return "factordb";
    }
    return "?";
}

// A (possibly partial) prime factorization of n:
//   prod factors[i].first ^ factors[i].second * cofactor == n,
// factors strictly increasing, every listed prime certified by
// classify_prime, cofactor 1 exactly when status is complete.
struct Factorization {
    Int n = 1;
    FactorStatus status = FactorStatus::complete;
    std::vector<std::pair<Int, unsigned long>> factors;
    Int cofactor = 1;
    FactorSource source = FactorSource::trial;
    // True when some listed prime is beyond the deterministic primality
    // range and was certified only probabilistically.
    bool probable_primality = false;
    // Tier-chain notes (e.g. a FactorDB failure that degraded to the next
    // tier). Provenance only; not part of the mathematical content.
    std::vector<std::string> notes;

    bool complete() const { return status == FactorStatus::complete; }

    Int reconstructed() const {
        Int prod = cofactor;
        for (const auto& [p, e] : factors)
            prod *= pow_ui(p, e);
        return prod;
    }

    // Mathematical content only: source/notes are provenance.
    bool same_content(const Factorization& o) const {
        return n == o.n && status == o.status && cofactor == o.cofactor &&
               factors == o.factors;
    }

    // Ordering used for cache conflicts: a complete entry beats a partial
    // one; among partials, the one with the smaller cofactor knows more.
    bool more_complete_than(const Factorization& o) const {
        if (complete() != o.complete())
            return complete();
        return cofactor < o.cofactor;
    }

    long exponent_of(const Int& p) const {
        for (const auto& [q, e] : factors)
            if (q == p)
                return static_cast<long>(e);
        return 0;
    }
};

namespace detail {

inline void sort_and_merge(std::vector<std::pair<Int, unsigned long>>& fs) {
    std::sort(fs.begin(), fs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    size_t w = 0;
    for (size_t i = 0; i < fs.size(); ++i) {
        if (w > 0 && fs[w - 1].first == fs[i].first)
            fs[w - 1].second += fs[i].second;
        else
            fs[w++] = fs[i];
    }
    fs.resize(w);
}

}  // namespace detail

// Checks the structural invariants; throws on violation. Primality of the
// listed factors is certified (and the probable flag refreshed).
inline void verify_factorization(Factorization& f) {
    if (f.n < 1 || f.cofactor < 1)
        throw std::invalid_argument("factorization: nonpositive n or cofactor");
    f.probable_primality = false;
    for (size_t i = 0; i < f.factors.size(); ++i) {
        if (i > 0 && !(f.factors[i - 1].first < f.factors[i].first))
            throw std::invalid_argument("factorization: primes not increasing");
        if (f.factors[i].second == 0)
            throw std::invalid_argument("factorization: zero exponent");
        switch (classify_prime(f.factors[i].first)) {
            case Primality::composite:
                throw std::invalid_argument("factorization: composite factor " +
                                            f.factors[i].first.get_str());
            case Primality::probable_prime:
                f.probable_primality = true;
                break;
            case Primality::prime:
                break;
        }
    }
    if (f.reconstructed() != f.n)
        throw std::invalid_argument("factorization: product mismatch for n=" +
                                    f.n.get_str());
    if (f.complete() != (f.cofactor == 1))
        throw std::invalid_argument("factorization: status/cofactor mismatch");
}

inline nlohmann::json to_json(const Factorization& f) {
    nlohmann::json jf = nlohmann::json::array();
    for (const auto& [p, e] : f.factors)
        jf.push_back({p.get_str(), e});
    return {{"n", f.n.get_str()},
            {"status", to_string(f.status)},
            {"factors", jf},
            {"cofactor", f.cofactor.get_str()},
            {"source", to_string(f.source)}};
}

inline Factorization factorization_from_json(const nlohmann::json& j) {
    Factorization f;
    f.n = parse_int(j.at("n").get<std::string>());
    std::string st = j.at("status").get<std::string>();
    if (st == "complete")
        f.status = FactorStatus::complete;
    else if (st == "partial")
        f.status = FactorStatus::partial;
    else
        throw std::invalid_argument("factorization: bad status '" + st + "'");
    for (const auto& e : j.at("factors")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("factorization: bad factor entry");
        f.factors.emplace_back(parse_int(e[0].get<std::string>()),
                               e[1].get<unsigned long>());
    }
    f.cofactor = parse_int(j.at("cofactor").get<std::string>());
    std::string src = j.value("source", "cache");
    if (src == "trial") f.source = FactorSource::trial;
    else if (src == "general") f.source = FactorSource::general;
    else if (src == "factordb") f.source = FactorSource::factordb;
    else f.source = FactorSource::cache;
    verify_factorization(f);
    return f;
}

}  // namespace factorchain
