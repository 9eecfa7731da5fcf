// Command-line front end: search runs, ceil-log certification, one-off
// factoring, and the verification suites.

#include <iostream>

#include <CLI11.hpp>

#include "factorchain/presets.hpp"
#include "factorchain/report.hpp"
#include "factorchain/verify.hpp"

namespace {

using namespace factorchain;

FactorDbMode parse_mode(const std::string& s) {
    if (s == "off")
        return FactorDbMode::off;
    if (s == "cache")
        return FactorDbMode::cache_only;
    if (s == "online")
        return FactorDbMode::online;
    throw CLI::ValidationError("--factordb must be off, cache or online");
}

int cmd_search(const std::vector<std::string>& config_paths,
               const std::vector<std::string>& presets, const std::string& out_dir,
               const std::string& cache_path, const std::string& factordb,
               int parallel, int workers, bool include_long_runs, bool dry_run) {
    auto cache = seed_cache(cache_path.empty()
                                ? std::nullopt
                                : std::optional<std::filesystem::path>(cache_path));
    for (const auto& err : cache->load_errors())
        std::cerr << "warning: cache: " << err << "\n";
    FactorOracle oracle({}, cache);

    std::vector<RunConfig> cfgs;
    for (const auto& spec : presets) {
        if (spec.rfind("table1:", 0) != 0)
            throw ConfigError({"preset must be of the form table1:<row>"});
        auto rows = preset_table1(spec.substr(7), oracle);
        cfgs.insert(cfgs.end(), std::make_move_iterator(rows.begin()),
                    std::make_move_iterator(rows.end()));
    }
    for (const auto& path : config_paths)
        cfgs.push_back(load_run_config(path, oracle));

    if (cfgs.empty())
        throw ConfigError({"nothing to run: give --config or --preset"});

    std::vector<std::string> skipped;
    if (!include_long_runs) {
        std::vector<RunConfig> kept;
        for (auto& cfg : cfgs) {
            if (cfg.long_run)
                skipped.push_back(cfg.run_id);
            else
                kept.push_back(std::move(cfg));
        }
        cfgs = std::move(kept);
    }
    for (auto& cfg : cfgs) {
        if (!factordb.empty())
            cfg.factor_policy.factordb = parse_mode(factordb);
        if (!cache_path.empty())
            cfg.factor_policy.cache_path = cache_path;
    }
    if (!skipped.empty()) {
        std::cerr << "skipping " << skipped.size()
                  << " long-run config(s) (use --include-long-runs):";
        for (const auto& id : skipped)
            std::cerr << " " << id;
        std::cerr << "\n";
    }
    if (cfgs.empty())
        throw ConfigError({"all selected configs are long-run; "
                           "pass --include-long-runs to execute them"});

    if (dry_run) {
        nlohmann::json all = nlohmann::json::array();
        for (const auto& cfg : cfgs) {
            validate_run_config(cfg, oracle.with_policy(cfg.factor_policy));
            all.push_back(run_config_to_json(cfg));
        }
        std::cout << all.dump(2) << "\n";
        return 0;
    }

    auto reports = execute_and_report(cfgs, parallel, out_dir, oracle, workers);
    for (const auto& rep : reports)
        std::cout << rep.run_id << ": candidates=" << rep.candidate_count
                  << " no_upper_bound=" << rep.no_upper_bound_count
                  << " inconclusive=" << rep.inconclusive_count
                  << " branches=" << rep.branches_visited << " elapsed="
                  << rep.elapsed_seconds << "s -> " << rep.events_path << "\n";
    int code = exit_code_for(reports);
    std::cout << (code == 0 ? "all runs clean" : "runs left unresolved cases")
              << " (exit " << code << ")\n";
    return code;
}

int cmd_certify(const std::string& prime, unsigned long max_power,
                unsigned long delta) {
    Int p = parse_int(prime);
    bool ok = certify_ceil_log(p, max_power, delta);
    nlohmann::json verdict{{"prime", p.get_str()},
                           {"max_power", max_power},
                           {"delta", delta},
                           {"certified", ok}};
    std::cout << verdict.dump() << "\n";
    return ok ? 0 : 1;
}

int cmd_factor(const std::string& number, unsigned long trial_limit,
               const std::string& factordb, const std::string& cache_path,
               bool no_general) {
    FactorPolicy policy;
    policy.trial_limit = trial_limit;
    policy.allow_general = !no_general;
    if (!factordb.empty())
        policy.factordb = parse_mode(factordb);
    auto cache = seed_cache(cache_path.empty()
                                ? std::nullopt
                                : std::optional<std::filesystem::path>(cache_path));
    FactorOracle oracle(policy, cache);
    Factorization fz = oracle.factor(expand_expression(number));
    nlohmann::json j = to_json(fz);
    if (fz.probable_primality)
        j["probable_primality"] = true;
    if (!fz.notes.empty())
        j["notes"] = fz.notes;
    std::cout << j.dump() << "\n";
    return fz.complete() ? 0 : 2;
}

int cmd_verify(const std::string& suite, uint64_t seed) {
    FactorOracle oracle({}, seed_cache());
    auto results = run_verify_suites(suite, oracle, seed);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  cases="
                  << r.cases << "  elapsed=" << r.elapsed_seconds << "s\n";
        for (const auto& f : r.failures)
            std::cout << "      " << f << "\n";
        all_pass &= r.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic branch-and-prune search for numbers with a "
                 "prescribed abundancy index"};
    app.require_subcommand(1);

    auto* search = app.add_subcommand("search", "Run search configurations");
    std::vector<std::string> config_paths, presets;
    std::string out_dir = "out", cache_path, factordb;
    int parallel = 1, workers = 1;
    bool include_long_runs = false, dry_run = false;
    search->add_option("--config", config_paths, "Run config JSON file(s)");
    search->add_option("--preset", presets,
                       "Bundled run matrix rows, e.g. table1:k5, table1:k8, "
                       "table1:desk, table1:all");
    search->add_option("--out", out_dir, "Output directory");
    search->add_option("--cache", cache_path, "Factorization cache file (JSONL)");
    search->add_option("--factordb", factordb, "FactorDB mode: off|cache|online");
    search->add_option("--parallel", parallel, "Configs run concurrently");
    search->add_option("--workers", workers, "Worker threads inside each run");
    search->add_flag("--include-long-runs", include_long_runs,
                     "Execute configs flagged long-run");
    search->add_flag("--dry-run", dry_run,
                     "Validate and print the materialized configs, do not run");

    auto* certify = app.add_subcommand(
        "certify", "Certify the ceil-log valuation bound for a prime");
    std::string prime;
    unsigned long max_power = 0, delta = 0;
    certify->add_option("--prime", prime, "Odd prime r")->required();
    certify->add_option("--max-power", max_power, "Certify up to r^A")->required();
    certify->add_option("--delta", delta, "Allowed excess")->required();

    auto* factor = app.add_subcommand("factor", "Factor one integer");
    std::string number;
    unsigned long trial_limit = 1000000;
    std::string f_factordb, f_cache;
    bool no_general = false;
    factor->add_option("number", number, "Decimal integer or expression b^e[+-c]")
        ->required();
    factor->add_option("--trial-limit", trial_limit, "Trial division limit");
    factor->add_option("--factordb", f_factordb, "FactorDB mode: off|cache|online");
    factor->add_option("--cache", f_cache, "Factorization cache file (JSONL)");
    factor->add_flag("--no-general", no_general, "Disable general-purpose factoring");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    uint64_t seed = 1;
    verify->add_option("--suite", suite,
                       "lemma1|prop4|prop5|prop6|cor7|lemma9|prop2|engine-oracle|all")
        ->required();
    verify->add_option("--seed", seed, "Seed for randomized suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (search->parsed())
            return cmd_search(config_paths, presets, out_dir, cache_path, factordb,
                              parallel, workers, include_long_runs, dry_run);
        if (certify->parsed())
            return cmd_certify(prime, max_power, delta);
        if (factor->parsed())
            return cmd_factor(number, trial_limit, f_factordb, f_cache, no_general);
        if (verify->parsed())
            return cmd_verify(suite, seed);
    } catch (const factorchain::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
