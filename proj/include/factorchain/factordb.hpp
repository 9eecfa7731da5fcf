#pragma once

#include <chrono>
#include <string>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "factorchain/factorization.hpp"

namespace factorchain {

enum class FactorDbMode { off, cache_only, online };

inline const char* to_string(FactorDbMode m) {
    switch (m) {
        case FactorDbMode::off: return "off";
        case FactorDbMode::cache_only: return "cache";
        case FactorDbMode::online: return "online";
    }
    return "?";
}

// Expands "B^E", "B^E-C", "B^E+C" or a plain decimal integer. Queries are
// always sent to the remote service in decimal.
inline Int expand_expression(const std::string& expr) {
    auto caret = expr.find('^');
    if (caret == std::string::npos)
        return parse_int(expr);
    Int base = parse_int(expr.substr(0, caret));
    std::string rest = expr.substr(caret + 1);
    size_t i = 0;
    while (i < rest.size() && isdigit(static_cast<unsigned char>(rest[i])))
        ++i;
    if (i == 0)
        throw std::invalid_argument("expand_expression: bad exponent in '" + expr + "'");
    unsigned long e = std::stoul(rest.substr(0, i));
    Int value = pow_ui(base, e);
    if (i < rest.size()) {
        char op = rest[i];
        Int c = parse_int(rest.substr(i + 1));
        if (op == '-')
            value -= c;
        else if (op == '+')
            value += c;
        else
            throw std::invalid_argument("expand_expression: bad operator in '" + expr + "'");
    }
    if (value < 1)
        throw std::invalid_argument("expand_expression: nonpositive value");
    return value;
}

struct FactorDbResult {
    enum class State { ok, unknown, error };
    State state = State::unknown;
    Factorization fz;
    std::string message;
};

// Client for the factordb.com query API. Remote data is treated as a set
// of claims: every returned factor is re-verified by division and
// primality check before it is used. A small built-in table answers the
// two sigma(19531^a) lookups offline.
class FactorDbClient {
public:
    std::string base_url = "http://factordb.com";
    int max_retries = 3;
    int backoff_ms = 500;

    FactorDbResult lookup(const Int& n, FactorDbMode mode) const {
        if (mode == FactorDbMode::off)
            return {FactorDbResult::State::error, {}, "factordb disabled"};
        if (auto hit = builtin(n))
            return {FactorDbResult::State::ok, *hit, "builtin table"};
        if (mode == FactorDbMode::cache_only)
            return {FactorDbResult::State::unknown, {}, "not in builtin table"};
        return query_remote(n);
    }

    // The two facts used for sigma(19531^58) and sigma(19531^72): their
    // smallest prime factors, originally retrieved by querying
    // 19531^59-1 and 19531^73-1.
    static std::optional<Factorization> builtin(const Int& n) {
        struct Fact { unsigned long a; const char* q; };
        static const Fact kFacts[] = {
            {58, "316636168836007"},
            {72, "57276919728938572349117407"},
        };
        for (const auto& fact : kFacts) {
            Int sigma = sigma_value(19531, fact.a);
            if (n != sigma)
                continue;
            Int q = parse_int(fact.q);
            Factorization f;
            f.n = n;
            f.source = FactorSource::factordb;
            unsigned long e = 0;
            Int c = n;
            while (mpz_divisible_p(c.get_mpz_t(), q.get_mpz_t())) {
                mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
                ++e;
            }
            f.factors.emplace_back(q, e);
            f.cofactor = c;
            f.status = c == 1 ? FactorStatus::complete : FactorStatus::partial;
            verify_factorization(f);
            return f;
        }
        return std::nullopt;
    }

private:
    static Int sigma_value(unsigned long p, unsigned long a) {
        Int num = pow_ui(Int(p), a + 1) - 1;
        Int r;
        mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), Int(p - 1).get_mpz_t());
        return r;
    }

    FactorDbResult query_remote(const Int& n) const {
        std::string last_error;
        for (int attempt = 0; attempt < max_retries; ++attempt) {
            if (attempt > 0)
                std::this_thread::sleep_for(
                    std::chrono::milliseconds(backoff_ms << (attempt - 1)));
            auto [host, path_prefix] = split_url(base_url);
            httplib::Client cli(host);
            cli.set_connection_timeout(10);
            cli.set_read_timeout(30);
            auto res = cli.Get(path_prefix + "/api?query=" + n.get_str());
            if (!res) {
                last_error = "network error: " + httplib::to_string(res.error());
                continue;
            }
            if (res->status != 200) {
                last_error = "http status " + std::to_string(res->status);
                continue;
            }
            try {
                return parse_response(n, res->body);
            } catch (const std::exception& e) {
                last_error = std::string("malformed response: ") + e.what();
                continue;
            }
        }
        return {FactorDbResult::State::error, {}, last_error};
    }

    static std::pair<std::string, std::string> split_url(const std::string& url) {
        std::string rest = url;
        auto scheme = rest.find("://");
        std::string prefix = "http://";
        if (scheme != std::string::npos) {
            prefix = rest.substr(0, scheme + 3);
            rest = rest.substr(scheme + 3);
        }
        auto slash = rest.find('/');
        if (slash == std::string::npos)
            return {prefix + rest, ""};
        return {prefix + rest.substr(0, slash), rest.substr(slash)};
    }

    // Statuses other than FF/CF/P map to UNKNOWN. Factors listed by the
    // service that fail the primality check are folded into the cofactor;
    // a claimed factor that does not divide n is a malformed response.
    static FactorDbResult parse_response(const Int& n, const std::string& body) {
        auto j = nlohmann::json::parse(body);
        std::string status = j.at("status").get<std::string>();
        if (status != "FF" && status != "CF" && status != "P")
            return {FactorDbResult::State::unknown, {}, "status " + status};
        Factorization f;
        f.n = n;
        f.source = FactorSource::factordb;
        Int c = n;
        for (const auto& entry : j.at("factors")) {
            Int q = entry[0].is_string() ? parse_int(entry[0].get<std::string>())
                                         : Int(entry[0].get<long>());
            if (q < 2)
                throw std::invalid_argument("factor < 2");
            if (!is_prime(q))
                continue;
            unsigned long e = 0;
            while (mpz_divisible_p(c.get_mpz_t(), q.get_mpz_t())) {
                mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
                ++e;
            }
            if (e == 0)
                throw std::invalid_argument("claimed factor " + q.get_str() +
                                            " does not divide n");
            f.factors.emplace_back(q, e);
        }
        f.cofactor = c;
        f.status = c == 1 ? FactorStatus::complete : FactorStatus::partial;
        detail::sort_and_merge(f.factors);
        verify_factorization(f);
        if (f.factors.empty() && f.cofactor == n && n > 1)
            return {FactorDbResult::State::unknown, {}, "no verified factors"};
        return {FactorDbResult::State::ok, f, ""};
    }
};

}  // namespace factorchain
