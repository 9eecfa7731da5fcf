#pragma once

#include "factorchain/config.hpp"
#include "factorchain/seed_factors.hpp"

namespace factorchain {

// Cache preloaded with the bundled sigma(p^a) factorizations the presets
// need, so preset generation works offline and deterministically. Every
// bundled entry is re-verified on load (division and primality).
inline std::shared_ptr<FactorCache> seed_cache(
    const std::optional<std::filesystem::path>& backing = std::nullopt) {
    auto cache = backing ? std::make_shared<FactorCache>(*backing)
                         : std::make_shared<FactorCache>();
    cache->load_seed(kSeedFactorizations);
    return cache;
}

struct PresetRowInfo {
    const char* name;
    bool long_run;
};

// One entry per run matrix row; the k9 rows are long-run (hours of CPU in
// the worst cases) and excluded from default execution.
inline const std::vector<PresetRowInfo>& preset_rows() {
    static const std::vector<PresetRowInfo> rows = {
        {"k5", false},
        {"k6", false},
        {"k7", false},
        {"k8", false},
        {"k9-31", true},
        {"k9-31-min96", true},
        {"k9-19531", true},
        {"k9-19531-min88", true},
        {"k9-5", true},
    };
    return rows;
}

namespace detail {

inline RunConfig preset_base(long k) {
    RunConfig cfg;
    cfg.t_min = parse_rational("9/5");
    cfg.t_max = parse_rational("9/5");
    cfg.k = k;
    cfg.ignored_primes = {Int(3)};
    cfg.P_init = k <= 7 ? 4 : 5;
    return cfg;
}

inline Int pow10(unsigned long e) { return pow_ui(Int(10), e); }

// Off-sequence initialization rule: the increasing sequence of distinct
// prime factors q of sigma(p^a) with q > 5 (and optionally q below a
// ceiling, for the trial-division rows), each with minimum exponent
// v_q(sigma(p^a)).
inline std::vector<OffEntry> initial_off_from_sigma(
    const Factorization& fz, const std::optional<Int>& ceiling = std::nullopt) {
    std::vector<OffEntry> off;
    for (const auto& [q, e] : fz.factors) {
        if (q <= 5)
            continue;
        if (ceiling && q >= *ceiling)
            continue;
        off.push_back({q, e});
    }
    return off;
}

// B tiers keyed on the initial off-sequence size.
inline Int b_by_off_size(size_t off_size,
                         const std::vector<std::pair<size_t, Int>>& tiers) {
    for (const auto& [min_size, b] : tiers)
        if (off_size >= min_size)
            return b;
    throw ConfigError({"no B rule for initial off sequence of size " +
                       std::to_string(off_size)});
}

}  // namespace detail

// Materializes one run matrix row into concrete configs. Rows that range
// over an exponent a produce one config per even value of a. Long-run
// rows accept a partially factored sigma(p^a) when the bundled data has
// no complete factorization; the off sequence is then a (still sound)
// subset of the full rule.
inline std::vector<RunConfig> preset_table1(const std::string& row,
                                            const FactorOracle& oracle) {
    using detail::pow10;
    // Generation never falls into open-ended general factoring: bundled
    // data plus trial division must suffice for the long-run rows.
    FactorPolicy gen_policy;
    gen_policy.allow_general = false;
    gen_policy.factordb = FactorDbMode::cache_only;
    FactorOracle gen = oracle.with_policy(gen_policy);
    FactorPolicy desk_policy;  // k <= 8 sigma values factor quickly anyway
    desk_policy.factordb = FactorDbMode::cache_only;
    FactorOracle desk = oracle.with_policy(desk_policy);

    std::vector<RunConfig> out;

    if (row == "k5" || row == "k6" || row == "k7") {
        long k = row[1] - '0';
        RunConfig cfg = detail::preset_base(k);
        cfg.run_id = row;
        cfg.B = pow10(k == 5 ? 3 : k == 6 ? 7 : 14);
        out.push_back(std::move(cfg));
        return out;
    }

    if (row == "k8") {
        for (unsigned long a = 2; a <= 50; a += 2) {
            RunConfig cfg = detail::preset_base(8);
            cfg.run_id = "k8-a" + std::to_string(a);
            cfg.initial_on = {{Int(5), OnEntry::Kind::exact, a}};
            Factorization fz = desk.factor_sigma(Int(5), a);
            if (!fz.complete())
                throw ConfigError({"k8: sigma(5^" + std::to_string(a) +
                                   ") did not factor completely"});
            cfg.initial_off = detail::initial_off_from_sigma(fz);
            switch (a) {
                case 2: cfg.B = pow10(16); break;
                case 4: cfg.B = pow10(11); break;
                case 6: cfg.B = pow10(17); break;
                case 8: cfg.B = pow10(6); break;
                default:
                    cfg.B = detail::b_by_off_size(
                        cfg.initial_off.size(),
                        {{3, pow10(3)}, {2, pow10(7)}, {1, pow10(14)}});
            }
            out.push_back(std::move(cfg));
        }
        return out;
    }

    if (row == "k9-31" || row == "k9-19531") {
        bool is31 = row == "k9-31";
        Int p = is31 ? 31 : 19531;
        unsigned long a5 = is31 ? 2 : 6;
        unsigned long a_max = is31 ? 94 : 86;
        for (unsigned long a = 2; a <= a_max; a += 2) {
            RunConfig cfg = detail::preset_base(9);
            cfg.run_id = row + "-a" + std::to_string(a);
            cfg.long_run = true;
            cfg.initial_on = {{Int(5), OnEntry::Kind::exact, a5},
                              {p, OnEntry::Kind::exact, a}};
            if (!is31 && (a == 58 || a == 72)) {
                // The two runs whose sigma has no factor below 2^31: the
                // off sequence is the single externally provided prime.
                auto fact = FactorDbClient::builtin(sigma_prime_power(p, a));
                if (!fact)
                    throw ConfigError({"missing builtin fact for sigma(19531^" +
                                       std::to_string(a) + ")"});
                cfg.initial_off = detail::initial_off_from_sigma(*fact);
            } else if (!is31 && a >= 30) {
                // Trial-division rows: off primes below 2^31 only.
                Factorization fz = gen.factor_sigma(p, a);
                cfg.initial_off =
                    detail::initial_off_from_sigma(fz, Int(1) << 31);
            } else {
                Factorization fz = gen.factor_sigma(p, a);
                cfg.initial_off = detail::initial_off_from_sigma(fz);
            }
            cfg.B = detail::b_by_off_size(
                cfg.initial_off.size(),
                {{3, pow10(5)}, {2, pow10(11)}, {0, pow10(18)}});
            out.push_back(std::move(cfg));
        }
        return out;
    }

    if (row == "k9-31-min96" || row == "k9-19531-min88") {
        bool is31 = row == "k9-31-min96";
        RunConfig cfg = detail::preset_base(9);
        cfg.run_id = row;
        cfg.long_run = true;
        if (is31) {
            cfg.initial_on = {{Int(5), OnEntry::Kind::exact, 2},
                              {Int(31), OnEntry::Kind::min, 96}};
            cfg.B = pow10(16);
            cfg.special = SpecialPrimeSpec{Int(31), 14, 1};
        } else {
            cfg.initial_on = {{Int(5), OnEntry::Kind::exact, 6},
                              {Int(19531), OnEntry::Kind::min, 88}};
            cfg.B = pow10(17);
            cfg.special = SpecialPrimeSpec{Int(19531), 6, 1};
        }
        out.push_back(std::move(cfg));
        return out;
    }

    if (row == "k9-5") {
        // Exponent gate: v_5(n) <= (9-1)^2 + 1, so even a up to 64.
        for (unsigned long a = 2; a <= 64; a += 2) {
            RunConfig cfg = detail::preset_base(9);
            cfg.run_id = "k9-5-a" + std::to_string(a);
            cfg.long_run = true;
            cfg.initial_on = {{Int(5), OnEntry::Kind::exact, a}};
            Factorization fz = gen.factor_sigma(Int(5), a);
            if (!fz.complete())
                throw ConfigError({"k9-5: sigma(5^" + std::to_string(a) +
                                   ") did not factor completely"});
            cfg.initial_off = detail::initial_off_from_sigma(fz);
            switch (a) {
                case 4: cfg.B = pow10(18); break;
                case 8: cfg.B = pow10(11); break;
                case 10:
                case 12:
                case 46: cfg.B = pow10(29); break;
                default:
                    cfg.B = detail::b_by_off_size(
                        cfg.initial_off.size(),
                        {{4, pow10(4)}, {3, pow10(7)}, {2, pow10(14)},
                         {1, pow10(29)}});
            }
            out.push_back(std::move(cfg));
        }
        return out;
    }

    if (row == "desk" || row == "all") {
        for (const auto& info : preset_rows()) {
            if (row == "desk" && info.long_run)
                continue;
            auto cfgs = preset_table1(info.name, oracle);
            out.insert(out.end(), std::make_move_iterator(cfgs.begin()),
                       std::make_move_iterator(cfgs.end()));
        }
        return out;
    }

    throw ConfigError({"unknown preset row '" + row + "'"});
}

}  // namespace factorchain
