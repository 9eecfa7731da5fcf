#pragma once

#include <fstream>

#include "factorchain/search.hpp"

namespace factorchain {

inline nlohmann::json to_json(const SearchReport& rep) {
    return {{"run_id", rep.run_id},
            {"candidate_count", rep.candidate_count},
            {"no_upper_bound_count", rep.no_upper_bound_count},
            {"inconclusive_count", rep.inconclusive_count},
            {"event_counts", rep.event_counts},
            {"branches_visited", rep.branches_visited},
            {"elapsed_seconds", rep.elapsed_seconds},
            {"events_path", rep.events_path}};
}

// Streams terminal events as JSONL, one object per line.
class EventWriter {
public:
    explicit EventWriter(const std::filesystem::path& path) : out_(path) {
        if (!out_)
            throw std::runtime_error("cannot open events file " + path.string());
    }

    void operator()(const TerminalEvent& ev) {
        out_ << to_json(ev).dump() << "\n";
    }

    void close() { out_.close(); }

private:
    std::ofstream out_;
};

// A run "succeeds" in the search's own terms iff it has zero candidates,
// zero no-upper-bound events, and zero inconclusive diagnostics.
// Exit codes: 0 all clean, 1 candidates or no-upper-bound events,
// 2 inconclusive (factorization gaps), 3 configuration error.
inline int exit_code_for(const std::vector<SearchReport>& reports) {
    bool inconclusive = false, unresolved = false;
    for (const auto& r : reports) {
        inconclusive |= r.inconclusive_count > 0;
        unresolved |= r.candidate_count > 0 || r.no_upper_bound_count > 0;
    }
    if (inconclusive)
        return 2;
    if (unresolved)
        return 1;
    return 0;
}

// Runs each config, writing <out_dir>/<run_id>.events.jsonl per run plus
// a combined summary.json. Configs are independent; `parallelism` of them
// run concurrently, each internally using `workers_per_run` workers.
inline std::vector<SearchReport> execute_and_report(
    const std::vector<RunConfig>& cfgs, int parallelism,
    const std::filesystem::path& out_dir, const FactorOracle& oracle,
    int workers_per_run = 1) {
    std::filesystem::create_directories(out_dir);
    for (const auto& cfg : cfgs)
        validate_run_config(cfg, oracle.with_policy(cfg.factor_policy));

    std::vector<SearchReport> reports(cfgs.size());
    std::atomic<size_t> next{0};
    auto run_one = [&](size_t i) {
        const RunConfig& cfg = cfgs[i];
        std::string run_id = cfg.run_id.empty() ? "run" + std::to_string(i)
                                                : cfg.run_id;
        auto events_path = out_dir / (run_id + ".events.jsonl");
        EventWriter writer(events_path);
        RunOptions opts;
        opts.workers = workers_per_run;
        std::mutex sink_mu;
        opts.sink = [&](const TerminalEvent& ev) {
            std::lock_guard lock(sink_mu);
            writer(ev);
        };
        SearchReport rep = run_search(cfg, oracle.with_policy(cfg.factor_policy), opts);
        writer.close();
        rep.run_id = run_id;
        rep.events_path = events_path.string();
        reports[i] = std::move(rep);
    };

    int threads_n = std::max(1, std::min<int>(parallelism, cfgs.size()));
    if (threads_n == 1) {
        for (size_t i = 0; i < cfgs.size(); ++i)
            run_one(i);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads_n; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < cfgs.size();
                     i = next.fetch_add(1))
                    run_one(i);
            });
        for (auto& t : pool)
            t.join();
    }

    nlohmann::json summary;
    summary["runs"] = nlohmann::json::array();
    for (const auto& r : reports)
        summary["runs"].push_back(to_json(r));
    summary["exit_code"] = exit_code_for(reports);
    std::ofstream sum(out_dir / "summary.json");
    sum << summary.dump(2) << "\n";
    return reports;
}

}  // namespace factorchain
