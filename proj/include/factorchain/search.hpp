#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <functional>
#include <thread>

#include "factorchain/bounds.hpp"
#include "factorchain/config.hpp"

namespace factorchain {

// M and m for a branch state: exact on-entries contribute
// sigma_-1(p^a) to both denominators; min on-entries and off primes
// contribute sigma_-1(p^b) to M's and sigma_-1(p^inf) to m's.
inline std::pair<Rat, Rat> branch_M_m(const BranchState& st, const RunConfig& cfg) {
    Rat den_M(1), den_m(1);
    for (const auto& e : st.on) {
        den_M *= sigma_ratio(e.p, e.e);
        if (e.kind == OnEntry::Kind::exact)
            den_m *= sigma_ratio(e.p, e.e);
        else
            den_m *= abundancy_limit(e.p);
    }
    for (const auto& e : st.off) {
        den_M *= sigma_ratio(e.p, e.b);
        den_m *= abundancy_limit(e.p);
    }
    return {cfg.t_max / den_M, cfg.t_min / den_m};
}

// Applies the factor-chain step for sigma(p^a) = fz: the acceptance test,
// then the merge of fz's primes into the off sequence. p already in the
// off sequence means an off-prime expansion (factors may also hide in the
// off sequence); p new means a window expansion (P moves up to p).
// Returns nothing when the acceptance test fails.
inline std::optional<BranchState> merge_sigma_factors(const BranchState& st,
                                                      const Int& p, unsigned long a,
                                                      const Factorization& fz,
                                                      const RunConfig& cfg) {
    if (!fz.complete())
        throw std::invalid_argument("merge_sigma_factors: factorization not complete");
    const OffEntry* off_entry = st.find_off(p);
    bool off_expansion = off_entry != nullptr;

    for (const auto& [q, e] : fz.factors) {
        if (q > st.P || cfg.ignored(q) || st.contains_on(q))
            continue;
        if (off_expansion && st.find_off(q))
            continue;
        return std::nullopt;
    }

    BranchState child = st;
    if (off_expansion) {
        child.off.erase(child.off.begin() + (off_entry - st.off.data()));
    } else {
        child.P = p;
    }
    child.on.push_back({p, OnEntry::Kind::exact, a});
    for (const auto& [q, e] : fz.factors) {
        if (cfg.ignored(q) || st.contains_on(q))
            continue;
        bool merged = false;
        for (auto& existing : child.off)
            if (existing.p == q) {
                existing.b += e;
                merged = true;
                break;
            }
        if (!merged)
            child.off.push_back({q, e});
    }
    return child;
}

struct ExpandResult {
    std::vector<BranchState> children;
    std::vector<TerminalEvent> events;
};

// One branch of the tree, following the fixed step order:
//   (1) too many primes  (2) M < 1  (3) M = 1
//   (4) no special prime, |on| = k: too small / candidate
//   (5) special prime, |on|+|off| = k: exponent gate
//   (6) special prime, |on|+|off| = k-1, m > 1: gate via B_high
//   (7) |off| >= 1: expand the smallest off prime over even exponents
//   (8) |off| = 0: enumerate window primes, expanding each
// Children are emitted with exact-exponent expansions in ascending order
// of a, then the single min-exponent child; window primes ascend.
inline ExpandResult expand_branch(const BranchState& st, const RunConfig& cfg,
                                  const FactorOracle& oracle) {
    ExpandResult res;
    auto [M, m] = branch_M_m(st, cfg);
    auto terminal = [&](EventKind kind, std::string detail = "") {
        res.events.push_back({kind, st, M, m, std::move(detail)});
    };
    const long k = cfg.k;
    const long k1 = st.prime_count();
    const SpecialPrimeSpec* special =
        cfg.special && !cfg.disable_special_pruning ? &*cfg.special : nullptr;

    auto special_exponent = [&]() -> unsigned long {
        for (const auto& e : st.on)
            if (e.p == special->r)
                return e.e;
        throw std::logic_error("special prime missing from on sequence");
    };
    auto f_r = [&](const Int& q) -> long {
        auto it = cfg.initial_f_r.find(q);
        if (it != cfg.initial_f_r.end())
            return it->second;
        return f_special(q, special->r);
    };
    auto f_r_sum = [&]() {
        Int s(0);
        for (const auto& e : st.on)
            s += f_r(e.p);
        for (const auto& e : st.off)
            s += f_r(e.p);
        return s;
    };

    if (k1 > k) {
        terminal(EventKind::too_many_primes);
        return res;
    }
    if (M < 1) {
        terminal(EventKind::abundancy_too_large);
        return res;
    }
    if (M == 1) {
        terminal(EventKind::exact_solution);
        return res;
    }
    if (!special && static_cast<long>(st.on.size()) == k) {
        terminal(m > 1 ? EventKind::abundancy_too_small : EventKind::candidate);
        return res;
    }
    if (special && k1 == k) {
        Int s = f_r_sum();
        terminal(special_exponent_ok(special_exponent(), k, s)
                     ? EventKind::candidate
                     : EventKind::special_prune);
        return res;
    }
    if (special && k1 == k - 1 && m > 1) {
        Rat B_high = b_high(m, k, k1);
        if (B_high > Rat(special->L())) {
            terminal(EventKind::candidate);
            return res;
        }
        Int s = f_r_sum() + ceil_log(special->r, B_high) + special->delta;
        terminal(special_exponent_ok(special_exponent(), k, s)
                     ? EventKind::candidate
                     : EventKind::special_prune);
        return res;
    }

    auto push_child = [&](BranchState child) {
        child.branch_id = st.branch_id;
        child.branch_id.push_back(static_cast<int>(res.children.size()));
        res.children.push_back(std::move(child));
    };

    // Expands prime p from exponent a upward while p^a <= B, then emits
    // the min-exponent child. Returns false when a factorization came up
    // incomplete (the branch is then abandoned as inconclusive).
    auto expand_prime = [&](const Int& p, unsigned long a_start) -> bool {
        unsigned long a = a_start;
        bool off_expansion = st.find_off(p) != nullptr;
        while (pow_ui(p, a) <= cfg.B) {
            Factorization fz = oracle.factor_sigma(p, a);
            if (!fz.complete()) {
                terminal(EventKind::inconclusive_factorization,
                         "sigma(" + p.get_str() + "^" + std::to_string(a) +
                             ") = " + fz.cofactor.get_str() +
                             " * (factored part) did not factor completely");
                return false;
            }
            if (auto child = merge_sigma_factors(st, p, a, fz, cfg))
                push_child(std::move(*child));
            a += 2;
        }
        BranchState min_child = st;
        if (off_expansion) {
            auto* e = min_child.find_off(p);
            min_child.off.erase(min_child.off.begin() + (e - min_child.off.data()));
        } else {
            min_child.P = p;
        }
        min_child.on.push_back({p, OnEntry::Kind::min, a});
        push_child(std::move(min_child));
        return true;
    };

    if (!st.off.empty()) {
        const OffEntry* smallest = &st.off[0];
        for (const auto& e : st.off)
            if (e.p < smallest->p)
                smallest = &e;
        unsigned long a = smallest->b + (smallest->b % 2);
        if (!expand_prime(smallest->p, a))
            res.children.clear();
        return res;
    }

    if (m <= 1) {
        terminal(EventKind::no_upper_bound);
        return res;
    }
    PrimeWindow window = prime_window(M, m, k, k1, st.P);
    Rat low = window.low;
    Rat high = *window.high;
    Int floor_low(low);  // truncation: next_prime_above gives p > low
    for (Int p = next_prime_above(floor_low); Rat(p) < high;
         p = next_prime_above(p)) {
        if (st.contains_on(p))
            continue;
        if (special && k1 == k - 2 && high <= Rat(special->L())) {
            Rat scaled = m * Rat(p - 1) / Rat(p);
            if (scaled > 1) {
                Rat g = g_second_prime(m, k, k1, Rat(p));
                if (g <= Rat(special->L())) {
                    Int s = f_r_sum() + ceil_log(special->r, high) +
                            ceil_log(special->r, g) + 2 * special->delta;
                    // g decreases as p ascends, so once the gate fails
                    // here it fails for every later p.
                    if (!special_exponent_ok(special_exponent(), k, s))
                        break;
                }
            }
        }
        if (!expand_prime(p, 2)) {
            res.children.clear();
            return res;
        }
    }
    return res;
}

struct SearchReport {
    std::string run_id;
    long candidate_count = 0;
    long no_upper_bound_count = 0;
    long inconclusive_count = 0;
    std::map<std::string, long> event_counts;
    long branches_visited = 0;
    double elapsed_seconds = 0;
    std::string events_path;

    bool clean() const {
        return candidate_count == 0 && no_upper_bound_count == 0 &&
               inconclusive_count == 0;
    }
};

struct RunOptions {
    int workers = 1;
    // Receives every terminal event. In sequential mode events arrive in
    // branch_id (DFS preorder) order; with multiple workers the order is
    // unspecified but the multiset matches the sequential run.
    std::function<void(const TerminalEvent&)> sink;
};

namespace detail {

inline void count_event(SearchReport& rep, const TerminalEvent& ev) {
    ++rep.event_counts[to_string(ev.kind)];
    switch (ev.kind) {
        case EventKind::candidate: ++rep.candidate_count; break;
        case EventKind::no_upper_bound: ++rep.no_upper_bound_count; break;
        case EventKind::inconclusive_factorization: ++rep.inconclusive_count; break;
        default: break;
    }
}

}  // namespace detail

// Exhaustive depth-first exploration of the tree rooted at cfg's initial
// state. The caller is responsible for prior validation (including the
// special-prime certification).
inline SearchReport run_search(const RunConfig& cfg, const FactorOracle& oracle,
                               const RunOptions& opts = {}) {
    if (cfg.special && !cfg.disable_special_pruning &&
        !CertificationRegistry::instance().is_certified(*cfg.special))
        throw ConfigError({"special prime (r=" + cfg.special->r.get_str() +
                           ") has no certification record"});
    auto t0 = std::chrono::steady_clock::now();
    SearchReport rep;
    rep.run_id = cfg.run_id;

    BranchState root;
    root.on = cfg.initial_on;
    root.off = cfg.initial_off;
    root.P = cfg.P_init;

    if (opts.workers <= 1) {
        std::vector<BranchState> stack{std::move(root)};
        while (!stack.empty()) {
            BranchState st = std::move(stack.back());
            stack.pop_back();
            ExpandResult r = expand_branch(st, cfg, oracle);
            ++rep.branches_visited;
            for (const auto& ev : r.events) {
                detail::count_event(rep, ev);
                if (opts.sink)
                    opts.sink(ev);
            }
            for (auto it = r.children.rbegin(); it != r.children.rend(); ++it)
                stack.push_back(std::move(*it));
        }
    } else {
        std::mutex mu;
        std::condition_variable cv;
        std::deque<BranchState> queue;
        queue.push_back(std::move(root));
        int waiting = 0;
        bool done = false;
        auto worker = [&]() {
            std::unique_lock lock(mu);
            for (;;) {
                if (done)
                    return;
                if (queue.empty()) {
                    ++waiting;
                    if (waiting == opts.workers) {
                        done = true;
                        cv.notify_all();
                        return;
                    }
                    cv.wait(lock);
                    --waiting;
                    continue;
                }
                BranchState st = std::move(queue.back());
                queue.pop_back();
                lock.unlock();
                ExpandResult r = expand_branch(st, cfg, oracle);
                lock.lock();
                ++rep.branches_visited;
                for (const auto& ev : r.events) {
                    detail::count_event(rep, ev);
                    if (opts.sink)
                        opts.sink(ev);
                }
                for (auto& c : r.children)
                    queue.push_back(std::move(c));
                if (!r.children.empty())
                    cv.notify_all();
            }
        };
        std::vector<std::thread> threads;
        for (int i = 0; i < opts.workers; ++i)
            threads.emplace_back(worker);
        for (auto& t : threads)
            t.join();
    }

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace factorchain
