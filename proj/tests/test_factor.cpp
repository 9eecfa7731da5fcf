#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "factorchain/oracle.hpp"
#include "factorchain/presets.hpp"

using namespace factorchain;

namespace {

std::filesystem::path temp_file(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() / "factorchain-tests";
    std::filesystem::create_directories(dir);
    static std::atomic<int> n{0};
    return dir / (tag + std::to_string(n.fetch_add(1)) + ".jsonl");
}

}  // namespace

TEST_CASE("trial_division on pinned values") {
    Factorization f = trial_division(Int(2400), 7);
    CHECK(f.complete());
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<Int, unsigned long>(Int(2), 5));
    CHECK(f.factors[1] == std::pair<Int, unsigned long>(Int(3), 1));
    CHECK(f.factors[2] == std::pair<Int, unsigned long>(Int(5), 2));

    Factorization g = trial_division(Int(899), 10);
    CHECK(g.status == FactorStatus::partial);
    CHECK(g.factors.empty());
    CHECK(g.cofactor == 899);

    Factorization one = trial_division(Int(1), 1000);
    CHECK(one.complete());
    CHECK(one.factors.empty());
    CHECK(one.cofactor == 1);

    // prime cofactor promoted only up to limit^2
    Factorization h = trial_division(Int(101), 11);
    CHECK(h.complete());
    CHECK(h.factors.size() == 1);
    Factorization big = trial_division(Int(10007), 7);  // prime above limit^2
    CHECK(big.status == FactorStatus::partial);
    CHECK(big.cofactor == 10007);
}

TEST_CASE("trial_division guarantees") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<uint64_t> nd(2, 1ull << 40);
    std::uniform_int_distribution<unsigned long> ld(2, 5000);
    for (int i = 0; i < 2000; ++i) {
        Int n(std::to_string(nd(rng)));
        unsigned long limit = ld(rng);
        Factorization f = trial_division(n, limit);
        REQUIRE(f.reconstructed() == n);
        for (const auto& [p, e] : f.factors)
            REQUIRE((p <= limit || f.complete()));
        if (f.status == FactorStatus::partial) {
            // cofactor has no prime factor at most limit
            for (unsigned long d = 2; d <= limit; ++d)
                REQUIRE(f.cofactor % d != 0);
        }
    }
}

TEST_CASE("is_prime on pinned values") {
    CHECK(is_prime(Int(19531)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK(is_prime(parse_int("316636168836007")));
    CHECK(is_prime(parse_int("57276919728938572349117407")));
    CHECK_FALSE(is_prime(parse_int("316636168836007") * 3));
}

TEST_CASE("is_prime matches a sieve up to 20000") {
    std::vector<bool> sieve(20001, true);
    sieve[0] = sieve[1] = false;
    for (unsigned long i = 2; i <= 20000; ++i)
        if (sieve[i])
            for (unsigned long j = i * i; j <= 20000; j += i)
                sieve[j] = false;
    for (unsigned long i = 0; i <= 20000; ++i)
        REQUIRE(is_prime(Int(i)) == sieve[i]);
}

TEST_CASE("classify_prime flags large primes as probable") {
    // 2^127 - 1 is prime but beyond the deterministic base-set range.
    Int m127 = pow_ui(Int(2), 127) - 1;
    CHECK(classify_prime(m127) == Primality::probable_prime);
    CHECK(classify_prime(parse_int("316636168836007")) == Primality::prime);
}

TEST_CASE("factor on pinned values") {
    FactorOracle oracle;
    Factorization f = oracle.factor(Int(403));
    CHECK(f.complete());
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == 13);
    CHECK(f.factors[1].first == 31);

    Factorization one = oracle.factor(Int(1));
    CHECK(one.complete());
    CHECK(one.factors.empty());

    Factorization g = oracle.factor(Int(57));
    CHECK(g.complete());
    CHECK(g.factors[0].first == 3);
    CHECK(g.factors[1].first == 19);
}

TEST_CASE("factor_general splits perfect powers and semiprimes") {
    Factorization f = factor_general(pow_ui(Int(1000003), 3));
    CHECK(f.complete());
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == std::pair<Int, unsigned long>(Int(1000003), 3));

    // 10-digit semiprime
    Factorization g = factor_general(Int(99991) * Int(99989));
    CHECK(g.complete());
    CHECK(g.factors.size() == 2);
}

TEST_CASE("factor reconstruction over random inputs") {
    FactorOracle oracle;
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<uint64_t> nd(1, 1000000000000ull);
    for (int i = 0; i < 100000; ++i) {
        Int n(std::to_string(nd(rng)));
        Factorization f = oracle.factor(n);
        REQUIRE(f.complete());
        REQUIRE(f.reconstructed() == n);
        for (const auto& [p, e] : f.factors)
            REQUIRE(is_prime(p));
    }
}

TEST_CASE("cache round trip and idempotence") {
    auto path = temp_file("cache");
    FactorPolicy policy;
    policy.cache_path = path;
    Int n = Int(1000003) * 1000033;
    Factorization first, second;
    {
        FactorOracle oracle(policy);
        first = oracle.factor(n);
        second = oracle.factor(n);
        CHECK(second.source == FactorSource::cache);
        CHECK(first.same_content(second));
    }
    {
        // fresh process view: reload from disk
        FactorOracle oracle(policy);
        Factorization third = oracle.factor(n);
        CHECK(third.source == FactorSource::cache);
        CHECK(first.same_content(third));
    }
    std::filesystem::remove(path);
}

TEST_CASE("cache conflict resolution prefers the more complete entry") {
    FactorCache cache;
    Factorization partial;
    partial.n = 403;
    partial.status = FactorStatus::partial;
    partial.factors = {{Int(13), 1}};
    partial.cofactor = 31;
    partial.source = FactorSource::trial;
    cache.store(partial);

    Factorization complete;
    complete.n = 403;
    complete.factors = {{Int(13), 1}, {Int(31), 1}};
    complete.cofactor = 1;
    complete.status = FactorStatus::complete;
    complete.source = FactorSource::general;
    cache.store(complete);
    CHECK(cache.lookup(Int(403))->complete());

    cache.store(partial);  // downgrade ignored
    CHECK(cache.lookup(Int(403))->complete());
}

TEST_CASE("cache tolerates a torn trailing line") {
    auto path = temp_file("torn");
    {
        std::ofstream out(path);
        out << to_json(trial_division(Int(2400), 7)).dump() << "\n";
        out << "{\"n\": \"99\", \"status\": \"compl";  // torn write
    }
    FactorCache cache(path);
    CHECK(cache.size() == 1);
    CHECK(cache.load_errors().size() == 1);
    CHECK(cache.lookup(Int(2400)).has_value());
    std::filesystem::remove(path);
}

TEST_CASE("cache rejects corrupt entries") {
    auto path = temp_file("corrupt");
    {
        std::ofstream out(path);
        // wrong product: 403 != 13
        out << R"({"n":"403","status":"complete","factors":[["13",1]],"cofactor":"1","source":"trial"})"
            << "\n";
    }
    FactorCache cache(path);
    CHECK(cache.size() == 0);
    CHECK(cache.load_errors().size() == 1);
    std::filesystem::remove(path);
}

TEST_CASE("partial cache entries are improved by later tiers") {
    auto cache = std::make_shared<FactorCache>();
    Factorization partial;
    partial.n = Int(403) * 1000003;
    partial.status = FactorStatus::partial;
    partial.factors = {{Int(13), 1}};
    partial.cofactor = Int(31) * 1000003;
    partial.source = FactorSource::trial;
    cache->store(partial);

    FactorOracle oracle({}, cache);
    Factorization f = oracle.factor(partial.n);
    CHECK(f.complete());
    CHECK(f.factors.size() == 3);
    CHECK(cache->lookup(partial.n)->complete());
}

TEST_CASE("bundled seed data verifies and covers the preset range") {
    auto cache = seed_cache();
    CHECK(cache->size() > 100);
    for (unsigned long a = 2; a <= 64; a += 2) {
        auto hit = cache->lookup(sigma_prime_power(Int(5), a));
        REQUIRE(hit.has_value());
        CHECK(hit->complete());
    }
}
