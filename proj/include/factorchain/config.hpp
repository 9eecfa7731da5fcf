#pragma once

#include <map>

#include "factorchain/branch.hpp"
#include "factorchain/oracle.hpp"
#include "factorchain/valuation_theory.hpp"

namespace factorchain {

// One search run. The engine finds candidate partial factorizations of
// every n with t_min <= sigma_-1(n) <= t_max, omega(n) = k, and all
// primes of positive valuation in sigma_-1(n) listed in ignored_primes.
struct RunConfig {
    std::string run_id;
    Rat t_min;
    Rat t_max;
    long k = 0;
    std::vector<Int> ignored_primes;  // S_ignore
    Int B;                            // prime powers above B are "large"
    Int P_init;
    std::vector<OnEntry> initial_on;
    std::vector<OffEntry> initial_off;
    std::optional<SpecialPrimeSpec> special;
    std::map<Int, long> initial_f_r;  // user-specified f_r(q) seeds
    FactorPolicy factor_policy;
    bool long_run = false;  // excluded from default execution
    // Testing hook: ignore the special prime entirely (no exponent-gate
    // pruning, no early break). Not part of the config file schema.
    bool disable_special_pruning = false;

    bool ignored(const Int& q) const {
        for (const auto& g : ignored_primes)
            if (g == q)
                return true;
        return false;
    }
};

struct ConfigError : std::runtime_error {
    std::vector<std::string> issues;
    explicit ConfigError(std::vector<std::string> list)
        : std::runtime_error(join(list)), issues(std::move(list)) {}

    static std::string join(const std::vector<std::string>& list) {
        std::string s = "invalid run config:";
        for (const auto& i : list)
            s += "\n  - " + i;
        return s;
    }
};

enum class CertifyMode { auto_certify, require_existing };

// Full validation with field-level diagnostics. The special-prime
// certification is computed on demand (auto_certify) or must already be
// on record (require_existing).
inline void validate_run_config(const RunConfig& cfg, const FactorOracle& oracle,
                                CertifyMode mode = CertifyMode::auto_certify) {
    std::vector<std::string> issues;
    auto bad = [&](const std::string& field, const std::string& msg) {
        issues.push_back(field + ": " + msg);
    };

    if (!(Rat(1) < cfg.t_min))
        bad("t_min", "must exceed 1");
    if (!(cfg.t_min <= cfg.t_max))
        bad("t_max", "must be at least t_min");
    if (cfg.k < 1)
        bad("k", "must be positive");
    if (cfg.B < 1)
        bad("B", "must be positive");
    if (cfg.P_init < 1)
        bad("P_init", "must be positive");

    std::vector<Int> seen;
    auto check_prime = [&](const Int& p, const std::string& field) {
        if (!is_prime(p))
            bad(field, p.get_str() + " is not prime");
        for (const auto& q : seen)
            if (q == p)
                bad(field, "duplicate prime " + p.get_str());
        seen.push_back(p);
    };
    for (const auto& e : cfg.initial_on) {
        check_prime(e.p, "initial_on");
        if (e.e < 1)
            bad("initial_on", "exponent of " + e.p.get_str() + " must be >= 1");
    }
    for (const auto& e : cfg.initial_off) {
        check_prime(e.p, "initial_off");
        if (e.b < 1)
            bad("initial_off", "minimum exponent of " + e.p.get_str() +
                                   " must be >= 1");
    }
    for (const auto& g : cfg.ignored_primes)
        if (!is_prime(g))
            bad("ignored_primes", g.get_str() + " is not prime");

    // Every prime of positive valuation in t_min must be ignored; those
    // primes may divide sigma(n) without dividing n.
    if (Rat(1) < cfg.t_min) {
        Factorization num = oracle.factor(Int(cfg.t_min.get_num()));
        if (!num.complete()) {
            bad("t_min", "cannot factor numerator under the active policy");
        } else {
            for (const auto& [p, e] : num.factors)
                if (!cfg.ignored(p))
                    bad("ignored_primes", "prime " + p.get_str() +
                                              " has positive valuation in t_min "
                                              "but is not ignored");
        }
    }

    if (cfg.special) {
        const auto& sp = *cfg.special;
        if (!is_prime(sp.r))
            bad("special.r", sp.r.get_str() + " is not prime");
        if (sp.L_exponent < 1)
            bad("special.L_exponent", "must be >= 1");
        bool on = false;
        for (const auto& e : cfg.initial_on)
            if (e.p == sp.r)
                on = true;
        if (!on)
            bad("special.r", "must appear in initial_on");
        if (valuation(cfg.t_min, sp.r) != 0 || valuation(cfg.t_max, sp.r) != 0)
            bad("special.r", "target abundancy must have zero valuation at r");
        if (issues.empty()) {
            try {
                bool certified = mode == CertifyMode::auto_certify
                                     ? CertificationRegistry::instance().ensure(sp)
                                     : CertificationRegistry::instance().is_certified(sp);
                if (!certified)
                    bad("special", "(r=" + sp.r.get_str() + ", L_exponent=" +
                                       std::to_string(sp.L_exponent) + ", delta=" +
                                       std::to_string(sp.delta) +
                                       ") has no certification record");
            } catch (const std::exception& e) {
                bad("special", e.what());
            }
        }
    }

    for (const auto& [p, v] : cfg.initial_f_r) {
        bool known = false;
        for (const auto& e : cfg.initial_on)
            known |= e.p == p;
        for (const auto& e : cfg.initial_off)
            known |= e.p == p;
        if (!known)
            bad("initial_f_r", "prime " + p.get_str() +
                                   " is not in initial_on or initial_off");
        if (v < 0)
            bad("initial_f_r", "value for " + p.get_str() + " must be >= 0");
    }

    if (!issues.empty())
        throw ConfigError(std::move(issues));
}

// JSON schema: big integers and rationals are decimal strings ("9/5").
inline nlohmann::json run_config_to_json(const RunConfig& cfg) {
    nlohmann::json j;
    if (!cfg.run_id.empty())
        j["run_id"] = cfg.run_id;
    j["t_min"] = rational_str(cfg.t_min);
    j["t_max"] = rational_str(cfg.t_max);
    j["k"] = cfg.k;
    j["ignored_primes"] = nlohmann::json::array();
    for (const auto& p : cfg.ignored_primes)
        j["ignored_primes"].push_back(p.get_str());
    j["B"] = cfg.B.get_str();
    j["P_init"] = cfg.P_init.get_str();
    j["initial_on"] = nlohmann::json::array();
    for (const auto& e : cfg.initial_on)
        j["initial_on"].push_back(
            {{"p", e.p.get_str()},
             {"kind", e.kind == OnEntry::Kind::exact ? "exact" : "min"},
             {"e", e.e}});
    j["initial_off"] = nlohmann::json::array();
    for (const auto& e : cfg.initial_off)
        j["initial_off"].push_back({{"p", e.p.get_str()}, {"b", e.b}});
    if (cfg.special)
        j["special"] = {{"r", cfg.special->r.get_str()},
                        {"L_exponent", cfg.special->L_exponent},
                        {"delta", cfg.special->delta}};
    if (!cfg.initial_f_r.empty()) {
        nlohmann::json f = nlohmann::json::object();
        for (const auto& [p, v] : cfg.initial_f_r)
            f[p.get_str()] = v;
        j["initial_f_r"] = f;
    }
    j["factor_policy"] = {{"trial_limit", cfg.factor_policy.trial_limit},
                          {"allow_general", cfg.factor_policy.allow_general},
                          {"factordb", to_string(cfg.factor_policy.factordb)}};
    if (cfg.factor_policy.cache_path)
        j["factor_policy"]["cache_path"] = cfg.factor_policy.cache_path->string();
    if (cfg.long_run)
        j["long_run"] = true;
    return j;
}

inline RunConfig run_config_from_json(const nlohmann::json& j) {
    std::vector<std::string> issues;
    RunConfig cfg;
    try {
        cfg.run_id = j.value("run_id", "");
        cfg.t_min = parse_rational(j.at("t_min").get<std::string>());
        cfg.t_max = parse_rational(j.at("t_max").get<std::string>());
        cfg.k = j.at("k").get<long>();
        for (const auto& p : j.value("ignored_primes", nlohmann::json::array()))
            cfg.ignored_primes.push_back(parse_int(p.get<std::string>()));
        cfg.B = parse_int(j.at("B").get<std::string>());
        cfg.P_init = parse_int(j.at("P_init").get<std::string>());
        for (const auto& e : j.value("initial_on", nlohmann::json::array())) {
            OnEntry entry;
            entry.p = parse_int(e.at("p").get<std::string>());
            std::string kind = e.at("kind").get<std::string>();
            if (kind == "exact")
                entry.kind = OnEntry::Kind::exact;
            else if (kind == "min")
                entry.kind = OnEntry::Kind::min;
            else
                throw std::invalid_argument("initial_on: bad kind '" + kind + "'");
            entry.e = e.at("e").get<unsigned long>();
            cfg.initial_on.push_back(std::move(entry));
        }
        for (const auto& e : j.value("initial_off", nlohmann::json::array()))
            cfg.initial_off.push_back({parse_int(e.at("p").get<std::string>()),
                                       e.at("b").get<unsigned long>()});
        if (j.contains("special")) {
            SpecialPrimeSpec sp;
            sp.r = parse_int(j["special"].at("r").get<std::string>());
            sp.L_exponent = j["special"].at("L_exponent").get<unsigned long>();
            sp.delta = j["special"].at("delta").get<unsigned long>();
            cfg.special = sp;
        }
        if (j.contains("initial_f_r"))
            for (const auto& [key, val] : j["initial_f_r"].items())
                cfg.initial_f_r[parse_int(key)] = val.get<long>();
        if (j.contains("factor_policy")) {
            const auto& p = j["factor_policy"];
            cfg.factor_policy.trial_limit =
                p.value("trial_limit", cfg.factor_policy.trial_limit);
            cfg.factor_policy.allow_general =
                p.value("allow_general", cfg.factor_policy.allow_general);
            std::string mode = p.value("factordb", "off");
            if (mode == "off")
                cfg.factor_policy.factordb = FactorDbMode::off;
            else if (mode == "cache")
                cfg.factor_policy.factordb = FactorDbMode::cache_only;
            else if (mode == "online")
                cfg.factor_policy.factordb = FactorDbMode::online;
            else
                throw std::invalid_argument("factor_policy.factordb: bad mode '" +
                                            mode + "'");
            if (p.contains("cache_path"))
                cfg.factor_policy.cache_path = p["cache_path"].get<std::string>();
        }
        cfg.long_run = j.value("long_run", false);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError({e.what()});
    }
    return cfg;
}

// Parses, then validates (including the special-prime certification
// trigger).
inline RunConfig load_run_config(const std::filesystem::path& path,
                                 const FactorOracle& oracle,
                                 CertifyMode mode = CertifyMode::auto_certify) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError({"cannot open " + path.string()});
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError({path.string() + ": " + e.what()});
    }
    RunConfig cfg = run_config_from_json(j);
    if (cfg.run_id.empty())
        cfg.run_id = path.stem().string();
    validate_run_config(cfg, oracle, mode);
    return cfg;
}

}  // namespace factorchain
