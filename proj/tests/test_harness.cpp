#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <set>

#include "factorchain/presets.hpp"
#include "factorchain/report.hpp"

using namespace factorchain;

namespace {

std::filesystem::path temp_dir(const std::string& tag) {
    static std::atomic<int> n{0};
    auto dir = std::filesystem::temp_directory_path() /
               ("factorchain-harness-" + tag + std::to_string(n.fetch_add(1)));
    std::filesystem::create_directories(dir);
    return dir;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("preset k5/k6/k7 shapes") {
    FactorOracle oracle({}, seed_cache());
    auto k5 = preset_table1("k5", oracle);
    REQUIRE(k5.size() == 1);
    CHECK(k5[0].k == 5);
    CHECK(k5[0].B == pow_ui(Int(10), 3));
    CHECK(k5[0].P_init == 4);
    CHECK(k5[0].initial_on.empty());
    CHECK(k5[0].initial_off.empty());
    CHECK(k5[0].ignored_primes == std::vector<Int>{Int(3)});
    CHECK_FALSE(k5[0].long_run);

    CHECK(preset_table1("k6", oracle)[0].B == pow_ui(Int(10), 7));
    CHECK(preset_table1("k7", oracle)[0].B == pow_ui(Int(10), 14));
    CHECK(preset_table1("k7", oracle)[0].P_init == 4);
}

TEST_CASE("preset k8: 25 configs with the per-case B rules") {
    FactorOracle oracle({}, seed_cache());
    auto cfgs = preset_table1("k8", oracle);
    REQUIRE(cfgs.size() == 25);
    std::set<unsigned long> a_values;
    for (const auto& cfg : cfgs) {
        REQUIRE(cfg.initial_on.size() == 1);
        CHECK(cfg.initial_on[0].p == 5);
        CHECK(cfg.initial_on[0].kind == OnEntry::Kind::exact);
        CHECK(cfg.P_init == 5);
        a_values.insert(cfg.initial_on[0].e);
        unsigned long a = cfg.initial_on[0].e;
        if (a == 2) CHECK(cfg.B == pow_ui(Int(10), 16));
        if (a == 4) CHECK(cfg.B == pow_ui(Int(10), 11));
        if (a == 6) CHECK(cfg.B == pow_ui(Int(10), 17));
        if (a == 8) CHECK(cfg.B == pow_ui(Int(10), 6));
        if (a == 14) CHECK(cfg.B == pow_ui(Int(10), 3));  // |off| = 5
        if (a == 16) CHECK(cfg.B == pow_ui(Int(10), 7));  // |off| = 2
        if (a == 46) CHECK(cfg.B == pow_ui(Int(10), 14));  // sigma prime, |off| = 1
    }
    std::set<unsigned long> expected;
    for (unsigned long a = 2; a <= 50; a += 2)
        expected.insert(a);
    CHECK(a_values == expected);
}

TEST_CASE("preset fidelity: initial off sequence matches the sigma rule") {
    auto cache = seed_cache();
    FactorOracle oracle({}, cache);
    auto cfgs = preset_table1("k8", oracle);
    for (const auto& cfg : cfgs) {
        unsigned long a = cfg.initial_on[0].e;
        Int sigma = sigma_prime_power(Int(5), a);
        // gcd(sigma(5^a), 30) = 1 for even a
        CHECK(gcd(sigma, Int(30)) == 1);
        Factorization fz = oracle.factor(sigma);
        REQUIRE(fz.complete());
        std::vector<OffEntry> expected;
        for (const auto& [q, e] : fz.factors)
            if (q > 5)
                expected.push_back({q, e});
        REQUIRE(cfg.initial_off.size() == expected.size());
        for (size_t i = 0; i < expected.size(); ++i) {
            CHECK(cfg.initial_off[i].p == expected[i].p);
            CHECK(cfg.initial_off[i].b == expected[i].b);
            if (i > 0)
                CHECK(cfg.initial_off[i - 1].p < cfg.initial_off[i].p);
        }
    }
}

TEST_CASE("preset k9 rows carry the long-run flag and special primes") {
    FactorOracle oracle({}, seed_cache());
    auto special31 = preset_table1("k9-31-min96", oracle);
    REQUIRE(special31.size() == 1);
    const RunConfig& cfg = special31[0];
    CHECK(cfg.long_run);
    CHECK(cfg.k == 9);
    CHECK(cfg.B == pow_ui(Int(10), 16));
    REQUIRE(cfg.initial_on.size() == 2);
    CHECK(cfg.initial_on[0] == OnEntry{Int(5), OnEntry::Kind::exact, 2});
    CHECK(cfg.initial_on[1] == OnEntry{Int(31), OnEntry::Kind::min, 96});
    REQUIRE(cfg.special.has_value());
    CHECK(cfg.special->r == 31);
    CHECK(cfg.special->L_exponent == 14);
    CHECK(cfg.special->delta == 1);

    auto special19531 = preset_table1("k9-19531-min88", oracle);
    CHECK(special19531[0].B == pow_ui(Int(10), 17));
    CHECK(special19531[0].initial_on[1] ==
          OnEntry{Int(19531), OnEntry::Kind::min, 88});
    CHECK(special19531[0].special->r == 19531);

    // the two externally sourced rows use the single known prime
    auto rows = preset_table1("k9-19531", oracle);
    for (const auto& c : rows) {
        CHECK(c.long_run);
        unsigned long a = c.initial_on[1].e;
        if (a == 58) {
            REQUIRE(c.initial_off.size() == 1);
            CHECK(c.initial_off[0].p == parse_int("316636168836007"));
            CHECK(c.initial_off[0].b == 1);
            CHECK(c.B == pow_ui(Int(10), 18));
        }
        if (a == 72) {
            REQUIRE(c.initial_off.size() == 1);
            CHECK(c.initial_off[0].p == parse_int("57276919728938572349117407"));
        }
        // trial-division rows keep only primes below 2^31; the two
        // externally sourced singletons are exempt
        if (a >= 30 && a != 58 && a != 72)
            for (const auto& off : c.initial_off)
                CHECK(off.p < Int(1) << 31);
    }
}

TEST_CASE("preset k9-31: one config per even exponent up to 94") {
    FactorOracle oracle({}, seed_cache());
    auto cfgs = preset_table1("k9-31", oracle);
    REQUIRE(cfgs.size() == 47);
    for (const auto& cfg : cfgs) {
        CHECK(cfg.k == 9);
        CHECK(cfg.long_run);
        REQUIRE(cfg.initial_on.size() == 2);
        CHECK(cfg.initial_on[0] == OnEntry{Int(5), OnEntry::Kind::exact, 2});
        CHECK(cfg.initial_on[1].p == 31);
        CHECK(cfg.initial_on[1].kind == OnEntry::Kind::exact);
        for (const auto& off : cfg.initial_off)
            CHECK(off.p > 5);
    }
}

TEST_CASE("exponent gate enumeration on the presets") {
    FactorOracle oracle({}, seed_cache());
    std::set<unsigned long> k8_a, k9_a;
    for (const auto& cfg : preset_table1("k8", oracle))
        k8_a.insert(cfg.initial_on[0].e);
    for (const auto& cfg : preset_table1("k9-5", oracle))
        k9_a.insert(cfg.initial_on[0].e);
    std::set<unsigned long> expect8, expect9;
    for (unsigned long a = 2; a <= 50; a += 2)
        expect8.insert(a);
    for (unsigned long a = 2; a <= 64; a += 2)
        expect9.insert(a);
    CHECK(k8_a == expect8);
    CHECK(k9_a == expect9);
}

TEST_CASE("unknown preset row is rejected") {
    FactorOracle oracle({}, seed_cache());
    CHECK_THROWS_AS(preset_table1("k99", oracle), ConfigError);
}

TEST_CASE("config file round trip") {
    FactorOracle oracle({}, seed_cache());
    auto cfgs = preset_table1("k5", oracle);
    nlohmann::json j = run_config_to_json(cfgs[0]);
    RunConfig back = run_config_from_json(j);
    CHECK(back.t_min == cfgs[0].t_min);
    CHECK(back.k == cfgs[0].k);
    CHECK(back.B == cfgs[0].B);
    CHECK(back.P_init == cfgs[0].P_init);
    CHECK(back.ignored_primes == cfgs[0].ignored_primes);
    validate_run_config(back, oracle);

    auto dir = temp_dir("roundtrip");
    std::ofstream(dir / "k5.json") << j.dump(2);
    RunConfig loaded = load_run_config(dir / "k5.json", oracle);
    CHECK(loaded.B == cfgs[0].B);
    std::filesystem::remove_all(dir);
}

TEST_CASE("config validation rejections") {
    FactorOracle oracle({}, seed_cache());
    RunConfig cfg;
    cfg.t_min = cfg.t_max = parse_rational("9/5");
    cfg.k = 5;
    cfg.B = 1000;
    cfg.P_init = 4;

    SECTION("target primes must be ignored") {
        cfg.ignored_primes.clear();  // 3 has positive valuation in 9/5
        CHECK_THROWS_WITH(validate_run_config(cfg, oracle),
                          Catch::Matchers::ContainsSubstring("ignored"));
    }
    SECTION("t_min must exceed 1") {
        cfg.ignored_primes = {Int(3)};
        cfg.t_min = cfg.t_max = parse_rational("1/2");
        CHECK_THROWS_AS(validate_run_config(cfg, oracle), ConfigError);
    }
    SECTION("t ordering") {
        cfg.ignored_primes = {Int(3)};
        cfg.t_max = parse_rational("3/2");
        CHECK_THROWS_AS(validate_run_config(cfg, oracle), ConfigError);
    }
    SECTION("composite initial prime") {
        cfg.ignored_primes = {Int(3)};
        cfg.initial_on = {{Int(15), OnEntry::Kind::exact, 2}};
        CHECK_THROWS_AS(validate_run_config(cfg, oracle), ConfigError);
    }
    SECTION("special prime must be on") {
        cfg.ignored_primes = {Int(3)};
        cfg.special = SpecialPrimeSpec{Int(13), 3, 1};
        CHECK_THROWS_WITH(validate_run_config(cfg, oracle),
                          Catch::Matchers::ContainsSubstring("initial_on"));
    }
    SECTION("special prime needs zero valuation in the target") {
        cfg.ignored_primes = {Int(3), Int(5)};
        cfg.initial_on = {{Int(5), OnEntry::Kind::exact, 2}};
        cfg.special = SpecialPrimeSpec{Int(5), 2, 0};  // v_5(9/5) = -1
        CHECK_THROWS_AS(validate_run_config(cfg, oracle), ConfigError);
    }
    SECTION("uncertified special prime is rejected without auto-certify") {
        cfg.ignored_primes = {Int(3)};
        cfg.initial_on = {{Int(31), OnEntry::Kind::min, 96}};
        cfg.special = SpecialPrimeSpec{Int(31), 13, 1};  // not on record
        CHECK_THROWS_WITH(
            validate_run_config(cfg, oracle, CertifyMode::require_existing),
            Catch::Matchers::ContainsSubstring("certification record"));
    }
    SECTION("failed certification is rejected even with auto-certify") {
        cfg.ignored_primes = {Int(3)};
        cfg.initial_on = {{Int(31), OnEntry::Kind::min, 96}};
        cfg.special = SpecialPrimeSpec{Int(31), 2, 0};  // refuted by x = 513
        CHECK_THROWS_AS(validate_run_config(cfg, oracle), ConfigError);
    }
}

TEST_CASE("execute_and_report on the small presets") {
    auto cache = seed_cache();
    FactorOracle oracle({}, cache);
    std::vector<RunConfig> cfgs;
    for (const char* row : {"k5", "k6"})
        for (auto& c : preset_table1(row, oracle))
            cfgs.push_back(std::move(c));
    auto dir = temp_dir("exec");
    auto reports = execute_and_report(cfgs, 2, dir, oracle);
    REQUIRE(reports.size() == 2);
    for (const auto& rep : reports) {
        CHECK(rep.clean());
        CHECK(std::filesystem::exists(rep.events_path));
        // candidate_count must equal the number of candidate lines
        std::ifstream in(rep.events_path);
        std::string line;
        long candidates = 0;
        while (std::getline(in, line))
            if (nlohmann::json::parse(line)["kind"] == "candidate")
                ++candidates;
        CHECK(candidates == rep.candidate_count);
    }
    CHECK(exit_code_for(reports) == 0);
    CHECK(std::filesystem::exists(dir / "summary.json"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("event files are byte-identical across sequential reruns") {
    auto cache = seed_cache();
    FactorOracle oracle({}, cache);
    auto cfgs = preset_table1("k6", oracle);
    auto dir1 = temp_dir("rerun");
    auto dir2 = temp_dir("rerun");
    execute_and_report(cfgs, 1, dir1, oracle);
    execute_and_report(cfgs, 1, dir2, oracle);
    CHECK(read_file(dir1 / "k6.events.jsonl") == read_file(dir2 / "k6.events.jsonl"));
    std::filesystem::remove_all(dir1);
    std::filesystem::remove_all(dir2);
}

TEST_CASE("deliberately tiny B yields a nonzero exit") {
    FactorOracle oracle({}, seed_cache());
    RunConfig cfg;
    cfg.run_id = "tiny";
    cfg.t_min = cfg.t_max = parse_rational("9/5");
    cfg.k = 5;
    cfg.ignored_primes = {Int(3)};
    cfg.B = 10;
    cfg.P_init = 4;
    auto dir = temp_dir("tiny");
    auto reports = execute_and_report({cfg}, 1, dir, oracle);
    CHECK_FALSE(reports[0].clean());
    CHECK(reports[0].candidate_count > 0);
    CHECK(exit_code_for(reports) == 1);

    // the event stream is JSONL with the documented field set
    std::ifstream in(reports[0].events_path);
    std::string line;
    bool saw_candidate = false;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        REQUIRE(j.contains("branch_id"));
        REQUIRE(j["branch_id"].is_array());
        REQUIRE(j.contains("kind"));
        REQUIRE(j.contains("s_on"));
        REQUIRE(j.contains("s_off"));
        REQUIRE(j.contains("P"));
        REQUIRE(j.contains("M"));
        REQUIRE(j.contains("m"));
        CHECK(j["M"].get<std::string>().find('/') != std::string::npos);
        CHECK(j["m"].get<std::string>().find('/') != std::string::npos);
        if (j["kind"] == "candidate") {
            saw_candidate = true;
            for (const auto& e : j["s_on"]) {
                REQUIRE(e.contains("p"));
                REQUIRE(e.contains("kind"));
                REQUIRE(e.contains("e"));
                CHECK((e["kind"] == "exact" || e["kind"] == "min"));
            }
            for (const auto& e : j["s_off"]) {
                REQUIRE(e.contains("p"));
                REQUIRE(e.contains("b"));
            }
        }
    }
    CHECK(saw_candidate);
    std::filesystem::remove_all(dir);
}

TEST_CASE("inconclusive runs exit with code 2") {
    FactorOracle oracle({}, seed_cache());
    RunConfig cfg;
    cfg.run_id = "weak";
    cfg.t_min = cfg.t_max = parse_rational("9/5");
    cfg.k = 5;
    cfg.ignored_primes = {Int(3)};
    cfg.B = 1000;
    cfg.P_init = 4;
    // strong enough to validate (factor 9), too weak for sigma(5^4) = 11*71
    cfg.factor_policy.trial_limit = 3;
    cfg.factor_policy.allow_general = false;
    auto dir = temp_dir("weak");
    auto reports = execute_and_report({cfg}, 1, dir, oracle);
    CHECK(reports[0].inconclusive_count > 0);
    CHECK(exit_code_for(reports) == 2);
    std::filesystem::remove_all(dir);
}
