#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "factorchain/rational.hpp"

namespace factorchain {

// An on prime: its exponent is finalized for the current branch, either
// exactly (v_p(n) = e) or as a lower bound (v_p(n) >= e).
struct OnEntry {
    enum class Kind { exact, min };
    Int p;
    Kind kind = Kind::exact;
    unsigned long e = 0;

    bool operator==(const OnEntry&) const = default;
};

// An off prime: a known prime factor with a provisional minimum exponent,
// awaiting expansion.
struct OffEntry {
    Int p;
    unsigned long b = 0;

    bool operator==(const OffEntry&) const = default;
};

// One node of the search tree. branch_id is the path of child indices
// from the root; its lexicographic order equals sequential DFS emission
// order. Every prime factor of the eventual n outside on+off exceeds P.
struct BranchState {
    std::vector<OnEntry> on;
    std::vector<OffEntry> off;
    Int P;
    std::vector<int> branch_id;

    size_t depth() const { return branch_id.size(); }
    long prime_count() const { return static_cast<long>(on.size() + off.size()); }

    bool contains_on(const Int& q) const {
        for (const auto& e : on)
            if (e.p == q)
                return true;
        return false;
    }
    const OffEntry* find_off(const Int& q) const {
        for (const auto& e : off)
            if (e.p == q)
                return &e;
        return nullptr;
    }
};

enum class EventKind {
    too_many_primes,
    abundancy_too_large,
    exact_solution,
    abundancy_too_small,
    candidate,
    no_upper_bound,
    special_prune,
    // Not one of the mathematical terminal outcomes: a required
    // sigma(p^a) failed to factor completely under the active policy, so
    // the branch was abandoned and the run is inconclusive.
    inconclusive_factorization,
};

inline const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::too_many_primes: return "too_many_primes";
        case EventKind::abundancy_too_large: return "abundancy_too_large";
        case EventKind::exact_solution: return "exact_solution";
        case EventKind::abundancy_too_small: return "abundancy_too_small";
        case EventKind::candidate: return "candidate";
        case EventKind::no_upper_bound: return "no_upper_bound";
        case EventKind::special_prune: return "special_prune";
        case EventKind::inconclusive_factorization: return "inconclusive_factorization";
    }
    return "?";
}

// CANDIDATE and NO_UPPER_BOUND are the only kinds meaning the run failed
// to rule something out; EXACT_SOLUTION implies M = 1 at the snapshot.
struct TerminalEvent {
    EventKind kind;
    BranchState state;
    Rat M;
    Rat m;
    std::string detail;  // set for inconclusive_factorization
};

inline nlohmann::json to_json(const TerminalEvent& ev) {
    nlohmann::json on = nlohmann::json::array();
    for (const auto& e : ev.state.on)
        on.push_back({{"p", e.p.get_str()},
                      {"kind", e.kind == OnEntry::Kind::exact ? "exact" : "min"},
                      {"e", e.e}});
    nlohmann::json off = nlohmann::json::array();
    for (const auto& e : ev.state.off)
        off.push_back({{"p", e.p.get_str()}, {"b", e.b}});
    nlohmann::json j{{"branch_id", ev.state.branch_id},
                     {"kind", to_string(ev.kind)},
                     {"s_on", on},
                     {"s_off", off},
                     {"P", ev.state.P.get_str()},
                     {"M", rational_str(ev.M)},
                     {"m", rational_str(ev.m)}};
    if (!ev.detail.empty())
        j["detail"] = ev.detail;
    return j;
}

}  // namespace factorchain
