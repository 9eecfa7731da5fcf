#pragma once

#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string_view>
#include <unordered_map>

#include "factorchain/factorization.hpp"

namespace factorchain {

// Append-only JSONL factorization cache, keyed by decimal n. One JSON
// object per line: {"n": "...", "status": "complete"|"partial",
// "factors": [["p", e], ...], "cofactor": "...", "source": "tier"}.
// On duplicate keys the more complete entry wins. Entry writes are a
// single line under the lock, so concurrent duplicate computation just
// resolves to idempotent appends.
class FactorCache {
public:
    FactorCache() = default;

    explicit FactorCache(const std::filesystem::path& path) : path_(path) {
        if (std::filesystem::exists(path)) {
            std::ifstream in(path);
            std::string line;
            size_t lineno = 0;
            while (std::getline(in, line)) {
                ++lineno;
                if (line.empty())
                    continue;
                try {
                    absorb(factorization_from_json(nlohmann::json::parse(line)));
                } catch (const std::exception& e) {
                    // Tolerate a torn trailing line from a crashed writer,
                    // but surface it to the caller.
                    load_errors_.push_back(path.string() + ":" +
                                           std::to_string(lineno) + ": " + e.what());
                }
            }
        }
        out_.open(path, std::ios::app);
        if (!out_)
            throw std::runtime_error("cache: cannot open " + path.string() +
                                     " for append");
    }

    std::optional<Factorization> lookup(const Int& n) const {
        std::lock_guard lock(mu_);
        auto it = map_.find(n.get_str());
        if (it == map_.end())
            return std::nullopt;
        return it->second;
    }

    // Records f if it is new or more complete than the stored entry.
    void store(const Factorization& f) {
        Factorization checked = f;
        verify_factorization(checked);
        std::lock_guard lock(mu_);
        if (!absorb(checked))
            return;
        if (out_.is_open()) {
            out_ << to_json(checked).dump() << "\n";
            out_.flush();
        }
    }

    // Loads bundled entries (same JSONL schema). Bundled data must be
    // intact: any verification failure throws.
    void load_seed(std::string_view jsonl) {
        std::lock_guard lock(mu_);
        size_t pos = 0;
        while (pos < jsonl.size()) {
            size_t eol = jsonl.find('\n', pos);
            if (eol == std::string_view::npos)
                eol = jsonl.size();
            std::string_view line = jsonl.substr(pos, eol - pos);
            pos = eol + 1;
            if (line.empty())
                continue;
            absorb(factorization_from_json(nlohmann::json::parse(line)));
        }
    }

    size_t size() const {
        std::lock_guard lock(mu_);
        return map_.size();
    }

    const std::vector<std::string>& load_errors() const { return load_errors_; }

private:
    // Returns true when the map changed. Caller holds the lock.
    bool absorb(const Factorization& f) {
        auto [it, inserted] = map_.try_emplace(f.n.get_str(), f);
        if (inserted)
            return true;
        if (f.more_complete_than(it->second)) {
            it->second = f;
            return true;
        }
        return false;
    }

    mutable std::mutex mu_;
    std::unordered_map<std::string, Factorization> map_;
    std::optional<std::filesystem::path> path_;
    std::ofstream out_;
    std::vector<std::string> load_errors_;
};

}  // namespace factorchain
