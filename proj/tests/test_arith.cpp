#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "factorchain/arith.hpp"
#include "factorchain/oracle.hpp"

using namespace factorchain;

namespace {

// Independent oracle: sigma by literal term summation.
Int sigma_by_summation(const Int& p, unsigned long a) {
    Int s(0), term(1);
    for (unsigned long i = 0; i <= a; ++i) {
        s += term;
        term *= p;
    }
    return s;
}

}  // namespace

TEST_CASE("sigma_prime_power on pinned values") {
    CHECK(sigma_prime_power(Int(5), 2) == 31);
    CHECK(sigma_prime_power(Int(5), 6) == 19531);
    CHECK(sigma_prime_power(Int(7), 0) == 1);
    CHECK_THROWS_AS(sigma_prime_power(Int(5), inf_exponent), std::domain_error);
}

TEST_CASE("sigma_prime_power matches term summation") {
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 97ul, 19531ul})
        for (unsigned long a = 0; a <= 40; ++a)
            REQUIRE(sigma_prime_power(Int(p), a) == sigma_by_summation(Int(p), a));
}

TEST_CASE("abundancy on pinned values") {
    CHECK(abundancy({PrimePower(Int(2), 1), PrimePower(Int(5), 1)}) ==
          parse_rational("9/5"));
    CHECK(abundancy({PrimePower(Int(3), 2), PrimePower(Int(5), 2)}) ==
          parse_rational("403/225"));
    CHECK(abundancy({}) == 1);
    CHECK_THROWS_AS(abundancy({PrimePower(Int(5), 1), PrimePower(Int(5), 2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(abundancy({PrimePower(Int(5), inf_exponent)}),
                    std::domain_error);
}

TEST_CASE("abundancy_limit") {
    CHECK(abundancy_limit(Int(5)) == parse_rational("5/4"));
    CHECK(abundancy_limit(Int(2)) == 2);
    CHECK(abundancy_limit(Int(31)) == parse_rational("31/30"));
}

TEST_CASE("valuation on integers and rationals") {
    CHECK(valuation(parse_rational("9/5"), Int(5)) == -1);
    CHECK(valuation(Int(1), Int(7)) == 0);
    CHECK(valuation(Int(2400), Int(5)) == 2);
    CHECK(valuation(parse_rational("9/5"), Int(3)) == 2);
    CHECK_THROWS_AS(valuation(Int(0), Int(5)), std::domain_error);
    CHECK_THROWS_AS(valuation(Rat(0), Int(5)), std::domain_error);
}

TEST_CASE("valuation is additive over products") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> num(-5000, 5000);
    std::uniform_int_distribution<long> den(1, 5000);
    const Int primes[] = {Int(2), Int(3), Int(5), Int(13)};
    for (int i = 0; i < 2000; ++i) {
        Rat x = make_rational(Int(num(rng)), Int(den(rng)));
        Rat y = make_rational(Int(num(rng)), Int(den(rng)));
        if (x == 0 || y == 0)
            continue;
        for (const Int& p : primes)
            REQUIRE(valuation(x * y, p) == valuation(x, p) + valuation(y, p));
    }
}

TEST_CASE("multiplicative_order") {
    CHECK(multiplicative_order(Int(5), Int(31)) == 3);
    CHECK(multiplicative_order(Int(1), Int(97)) == 1);
    CHECK(multiplicative_order(Int(5), Int(7)) == 6);
    CHECK_THROWS_AS(multiplicative_order(Int(6), Int(9)), std::domain_error);

    // cross-check by direct power enumeration
    for (unsigned long n = 2; n <= 60; ++n)
        for (unsigned long m = 1; m <= 60; ++m) {
            if (std::gcd(m, n) != 1)
                continue;
            unsigned long acc = m % n, c = 1;
            while (acc != 1) {
                acc = acc * m % n;
                ++c;
            }
            REQUIRE(multiplicative_order(Int(m), Int(n)) == c);
        }
}

TEST_CASE("ceil_log on pinned values") {
    Int p14 = pow_ui(Int(31), 14);
    CHECK(ceil_log(Int(31), p14) == 14);
    CHECK(ceil_log(Int(31), Int(p14 - 1)) == 14);
    CHECK(ceil_log(Int(19531), pow_ui(Int(10), 17)) == 4);
    CHECK(ceil_log(Int(2), Int(1)) == 0);
    CHECK(ceil_log(Int(2), parse_rational("1/7")) == 0);
}

TEST_CASE("ceil_log: unique e with b^(e-1) < x <= b^e") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<unsigned long> bd(2, 50);
    std::uniform_int_distribution<unsigned long> xd(2, 1u << 30);
    for (int i = 0; i < 5000; ++i) {
        Int b(bd(rng));
        Int x(xd(rng));
        unsigned long e = ceil_log(b, x);
        REQUIRE(e >= 1);
        REQUIRE(pow_ui(b, e) >= x);
        REQUIRE(pow_ui(b, e - 1) < x);
    }
}

TEST_CASE("abundancy is multiplicative over oracle factorizations") {
    FactorOracle oracle;
    auto abundancy_of = [&](const Int& n) {
        Factorization fz = oracle.factor(n);
        REQUIRE(fz.complete());
        Rat r(1);
        for (const auto& [p, e] : fz.factors)
            r *= sigma_ratio(p, e);
        return r;
    };
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<unsigned long> dist(2, 10000);
    int checked = 0;
    while (checked < 3000) {
        unsigned long m = dist(rng), n = dist(rng);
        if (std::gcd(m, n) != 1)
            continue;
        ++checked;
        REQUIRE(abundancy_of(Int(m) * Int(n)) ==
                abundancy_of(Int(m)) * abundancy_of(Int(n)));
    }
}

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("9/5") == make_rational(Int(9), Int(5)));
    CHECK(parse_rational("18/10") == parse_rational("9/5"));
    CHECK(rational_str(parse_rational("18/10")) == "9/5");
    CHECK(rational_str(Rat(2)) == "2/1");
    CHECK_THROWS_AS(parse_rational("9/0"), std::domain_error);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}
