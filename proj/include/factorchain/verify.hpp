#pragma once

#include <random>

#include "factorchain/presets.hpp"
#include "factorchain/search.hpp"

namespace factorchain {

struct SuiteResult {
    std::string name;
    bool pass = false;
    long cases = 0;
    std::vector<std::string> failures;
    double elapsed_seconds = 0;

    void fail(const std::string& msg) {
        if (failures.size() < 20)
            failures.push_back(msg);
        pass = false;
    }
};

namespace verify_detail {

class Timer {
public:
    Timer() : t0_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

inline std::vector<unsigned long> primes_up_to(unsigned long n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<unsigned long> ps;
    for (unsigned long i = 2; i <= n; ++i) {
        if (!sieve[i])
            continue;
        ps.push_back(i);
        for (unsigned long j = i * i; j <= n; j += i)
            sieve[j] = false;
    }
    return ps;
}

// Sum-of-divisors table by direct divisor accumulation: an oracle
// independent of sigma_prime_power.
inline std::vector<unsigned long> sigma_table(unsigned long n) {
    std::vector<unsigned long> s(n + 1, 0);
    for (unsigned long d = 1; d <= n; ++d)
        for (unsigned long m = d; m <= n; m += d)
            s[m] += d;
    return s;
}

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t n) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

inline uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t n) {
    uint64_t r = 1 % n;
    b %= n;
    while (e) {
        if (e & 1)
            r = mulmod(r, b, n);
        b = mulmod(b, b, n);
        e >>= 1;
    }
    return r;
}

}  // namespace verify_detail

// sigma_-1 monotonicity and multiplicativity:
//   (a) (p+1)/p <= sigma_-1(p^a) < sigma_-1(p^b) < p/(p-1) for a < b
//   (b) sigma_-1(p^a) < sigma_-1(q^b) for q < p
//   (c) sigma_-1(mn) = sigma_-1(m) sigma_-1(n) for coprime m, n
//   (d,e) m | n implies sigma_-1(m) <= sigma_-1(n), equality iff m = n
inline SuiteResult verify_lemma1(const FactorOracle& oracle, uint64_t seed = 1) {
    verify_detail::Timer timer;
    SuiteResult res;
    res.name = "lemma1";
    res.pass = true;
    auto primes = verify_detail::primes_up_to(100);

    for (unsigned long p : primes) {
        Rat limit = abundancy_limit(p);
        Rat floor_ratio = make_rational(Int(p) + 1, Int(p));
        Rat prev;
        for (unsigned long a = 1; a <= 12; ++a) {
            Rat cur = sigma_ratio(p, a);
            ++res.cases;
            if (cur < floor_ratio || cur >= limit)
                res.fail("lemma1(a): ratio out of range at p=" + std::to_string(p) +
                         " a=" + std::to_string(a));
            if (a > 1 && !(prev < cur))
                res.fail("lemma1(a): not increasing at p=" + std::to_string(p) +
                         " a=" + std::to_string(a));
            prev = cur;
        }
    }

    for (unsigned long q : primes)
        for (unsigned long p : primes) {
            if (q >= p)
                continue;
            for (unsigned long a = 1; a <= 12; ++a)
                for (unsigned long b = 1; b <= 12; ++b) {
                    ++res.cases;
                    if (!(sigma_ratio(p, a) < sigma_ratio(q, b))) {
                        res.fail("lemma1(b): p=" + std::to_string(p) +
                                 "^" + std::to_string(a) + " vs q=" +
                                 std::to_string(q) + "^" + std::to_string(b));
                        b = 13;
                        a = 13;
                    }
                }
        }

    auto abundancy_of = [&](const Int& n) {
        Factorization fz = oracle.factor(n);
        Rat r(1);
        for (const auto& [p, e] : fz.factors)
            r *= sigma_ratio(p, e);
        return r;
    };
    // (c) exhaustively for products up to 1e4, plus a random sample of
    // larger coprime pairs below 1e4 each.
    for (unsigned long m = 2; m * 2 <= 10000; ++m)
        for (unsigned long n = m + 1; m * n <= 10000; ++n) {
            if (std::gcd(m, n) != 1)
                continue;
            ++res.cases;
            if (abundancy_of(Int(m * n)) != abundancy_of(Int(m)) * abundancy_of(Int(n)))
                res.fail("lemma1(c): m=" + std::to_string(m) +
                         " n=" + std::to_string(n));
        }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned long> dist(2, 10000);
    for (int i = 0; i < 100000; ++i) {
        unsigned long m = dist(rng), n = dist(rng);
        if (std::gcd(m, n) != 1)
            continue;
        ++res.cases;
        if (abundancy_of(Int(m) * n) != abundancy_of(Int(m)) * abundancy_of(Int(n)))
            res.fail("lemma1(c): m=" + std::to_string(m) + " n=" + std::to_string(n));
    }

    // (d,e) against the divisor-sum table.
    auto sig = verify_detail::sigma_table(10000);
    for (unsigned long n = 1; n <= 10000; ++n) {
        Rat rn = make_rational(Int(sig[n]), Int(n));
        for (unsigned long m = 1; m * m <= n; ++m) {
            if (n % m != 0)
                continue;
            for (unsigned long d : {m, n / m}) {
                ++res.cases;
                Rat rm = make_rational(Int(sig[d]), Int(d));
                if (rm > rn)
                    res.fail("lemma1(d): m=" + std::to_string(d) +
                             " n=" + std::to_string(n));
                if (rm == rn && d != n)
                    res.fail("lemma1(e): m=" + std::to_string(d) +
                             " n=" + std::to_string(n));
            }
        }
    }

    res.elapsed_seconds = timer.seconds();
    return res;
}

// Bound soundness against planted factorizations: random n with known
// factorization, t_min = t_max = sigma_-1(n), every split into known and
// unknown primes must satisfy the four bound statements.
inline SuiteResult verify_prop4(uint64_t seed = 1, int instances = 10000) {
    verify_detail::Timer timer;
    SuiteResult res;
    res.name = "prop4";
    res.pass = true;
    auto primes = verify_detail::primes_up_to(200);
    primes.erase(primes.begin());  // odd primes only
    std::mt19937_64 rng(seed);

    for (int inst = 0; inst < instances; ++inst) {
        std::uniform_int_distribution<size_t> kd(1, 6);
        size_t k = kd(rng);
        std::vector<unsigned long> ps = primes;
        std::shuffle(ps.begin(), ps.end(), rng);
        ps.resize(k);
        std::uniform_int_distribution<unsigned long> ed(1, 6);
        std::vector<unsigned long> exps(k);
        for (auto& e : exps)
            e = ed(rng);

        Rat t(1);
        for (size_t i = 0; i < k; ++i)
            t *= sigma_ratio(ps[i], exps[i]);

        std::uniform_int_distribution<size_t> k1d(0, k - 1);
        size_t k1 = k1d(rng);
        // The known primes are any k1 of them; the unknown remainder is
        // sorted ascending.
        std::vector<size_t> idx(k);
        for (size_t i = 0; i < k; ++i)
            idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<size_t> known(idx.begin(), idx.begin() + k1);
        std::vector<size_t> unknown(idx.begin() + k1, idx.end());
        std::sort(unknown.begin(), unknown.end(),
                  [&](size_t a, size_t b) { return ps[a] < ps[b]; });

        std::uniform_int_distribution<size_t> l1d(0, k1);
        size_t l1 = l1d(rng);
        BoundContext ctx;
        ctx.t_min = t;
        ctx.t_max = t;
        ctx.k = static_cast<long>(k);
        for (size_t i = 0; i < k1; ++i) {
            unsigned long p = ps[known[i]];
            unsigned long a = exps[known[i]];
            if (i < l1) {
                ctx.exact_part.emplace_back(Int(p), a);
            } else {
                std::uniform_int_distribution<unsigned long> bd(1, a);
                ctx.floor_part.emplace_back(Int(p), bd(rng));
            }
        }

        ++res.cases;
        auto [M, m] = compute_M_m(ctx);
        Int next_p(ps[unknown[0]]);
        unsigned long next_a = exps[unknown[0]];
        if (!(M > 1)) {
            res.fail("prop4: M <= 1 at instance " + std::to_string(inst));
            continue;
        }
        if (!(b_low(M, false) <= Rat(next_p)))
            res.fail("prop4(a): 1/(M-1) > p at instance " + std::to_string(inst));
        if (next_a >= 2 && !(b_low(M, true) < Rat(next_p)))
            res.fail("prop4(b): B_low >= p at instance " + std::to_string(inst));
        if (m > 1 &&
            !(Rat(next_p) < b_high(m, ctx.k, static_cast<long>(k1))))
            res.fail("prop4(c): B_high <= p at instance " + std::to_string(inst));
        if (k1 + 2 <= k && next_a >= 2) {
            Rat A(next_p);
            if (m * (A - 1) / A > 1) {
                Rat g = g_second_prime(m, ctx.k, static_cast<long>(k1), A);
                if (!(Rat(Int(ps[unknown[1]])) < g))
                    res.fail("prop4(d): g(A) <= p_{k1+2} at instance " +
                             std::to_string(inst));
            }
        }
    }
    res.elapsed_seconds = timer.seconds();
    return res;
}

// The three-case valuation formula against full expansion of
// (x^(a+1) - 1)/(x - 1).
inline SuiteResult verify_prop5() {
    verify_detail::Timer timer;
    SuiteResult res;
    res.name = "prop5";
    res.pass = true;
    auto primes = verify_detail::primes_up_to(97);
    for (unsigned long p : primes) {
        if (p == 2)
            continue;
        for (unsigned long x = 2; x <= 200; ++x) {
            if (x % p == 0)
                continue;
            for (unsigned long a = 1; a <= 30; ++a) {
                ++res.cases;
                Int expanded = (pow_ui(Int(x), a + 1) - 1) / (Int(x) - 1);
                long direct = valuation(expanded, Int(p));
                long formula = val_sigma_at_prime(Int(x), a, Int(p));
                if (direct != formula) {
                    res.fail("prop5: x=" + std::to_string(x) + " a=" +
                             std::to_string(a) + " p=" + std::to_string(p) +
                             ": " + std::to_string(formula) + " vs " +
                             std::to_string(direct));
                }
            }
        }
    }
    res.elapsed_seconds = timer.seconds();
    return res;
}

// Every divisor d > 1 of a+1 yields a prime factor of sigma(p^a) of
// multiplicative order exactly d.
inline SuiteResult verify_prop6(const FactorOracle& oracle) {
    verify_detail::Timer timer;
    SuiteResult res;
    res.name = "prop6";
    res.pass = true;
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul}) {
        for (unsigned long a = 2; a <= 16; a += 2) {
            for (unsigned long d = 2; d <= a + 1; ++d) {
                if ((a + 1) % d != 0)
                    continue;
                ++res.cases;
                try {
                    WitnessResult w = primitive_order_witness(Int(p), a, d, oracle);
                    if (w.status != WitnessResult::Status::found) {
                        res.fail("prop6: factorization incomplete for sigma(" +
                                 std::to_string(p) + "^" + std::to_string(a) + ")");
                        continue;
                    }
                    if (sigma_prime_power(Int(p), a) % w.witness != 0 ||
                        multiplicative_order(Int(p), w.witness) != d)
                        res.fail("prop6: bad witness for p=" + std::to_string(p) +
                                 " a=" + std::to_string(a) + " d=" + std::to_string(d));
                } catch (const std::exception& e) {
                    res.fail(std::string("prop6: ") + e.what());
                }
            }
        }
    }
    res.elapsed_seconds = timer.seconds();
    return res;
}

// The special-prime exponent bound over all small odd squares: for
// every prime r | gcd(n, sigma(n)) such that larger prime factors of n
// have zero valuation in sigma_-1(n),
//   v_r(n) <= (k-1)^2 + c - v_r(sigma_-1(n)).
inline SuiteResult verify_cor7() {
    verify_detail::Timer timer;
    SuiteResult res;
    res.name = "cor7";
    res.pass = true;
    auto primes = verify_detail::primes_up_to(50);
    primes.erase(primes.begin());  // odd only

    std::vector<std::vector<std::pair<unsigned long, unsigned long>>> shapes;
    size_t np = primes.size();
    for (size_t i = 0; i < np; ++i)
        for (unsigned long e1 = 1; e1 <= 4; ++e1)
            shapes.push_back({{primes[i], e1}});
    for (size_t i = 0; i < np; ++i)
        for (size_t j = i + 1; j < np; ++j)
            for (unsigned long e1 = 1; e1 <= 3; ++e1)
                for (unsigned long e2 = 1; e1 + e2 <= 4; ++e2)
                    shapes.push_back({{primes[i], e1}, {primes[j], e2}});
    for (size_t i = 0; i < np; ++i)
        for (size_t j = i + 1; j < np; ++j)
            for (size_t l = j + 1; l < np; ++l)
                for (unsigned long e1 = 1; e1 <= 2; ++e1)
                    for (unsigned long e2 = 1; e1 + e2 <= 3; ++e2)
                        for (unsigned long e3 = 1; e1 + e2 + e3 <= 4; ++e3)
                            shapes.push_back({{primes[i], e1},
                                              {primes[j], e2},
                                              {primes[l], e3}});

    for (const auto& shape : shapes) {
        long k = static_cast<long>(shape.size());
        if (k <= 1)
            continue;  // the bound assumes omega(n) > 1
        Int n(1), sigma(1);
        for (const auto& [p, e] : shape) {
            n *= pow_ui(Int(p), 2 * e);
            sigma *= sigma_prime_power(Int(p), 2 * e);
        }
        for (const auto& [r_ul, er] : shape) {
            Int r(r_ul);
            if (sigma % r != 0)
                continue;  // r must divide gcd(n, sigma(n))
            bool applicable = true;
            for (const auto& [q, eq] : shape) {
                if (Int(q) > r && valuation(sigma, Int(q)) != valuation(n, Int(q)))
                    applicable = false;  // v_q(sigma_-1(n)) != 0
            }
            if (!applicable)
                continue;
            ++res.cases;
            Int c(0);
            for (const auto& [q, eq] : shape) {
                Int qi(q);
                if (qi == r || (qi - 1) % r == 0)
                    continue;  // gcd(r, q(q-1)) != 1
                Int o = multiplicative_order(qi, r);
                if (Int(2 * eq + 1) % o != 0)
                    continue;  // order must divide v_q(n) + 1
                c += f_special(qi, r);
            }
            long v_r_n = valuation(n, r);
            long v_r_sigma_ratio = valuation(sigma, r) - v_r_n;
            if (!(Int(v_r_n) <= Int(k - 1) * (k - 1) + c - v_r_sigma_ratio))
                res.fail("cor7: violated at n=" + n.get_str() +
                         " r=" + r.get_str());
        }
    }
    res.elapsed_seconds = timer.seconds();
    return res;
}

// Uniqueness of the lifted (p-1)-th root of unity: exhaustive scan of
// z^(p-1) = 1 mod p^a for p^a up to 1e6.
inline SuiteResult verify_lemma9() {
    verify_detail::Timer timer;
    SuiteResult res;
    res.name = "lemma9";
    res.pass = true;
    for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
        for (unsigned long a = 1; a <= 5; ++a) {
            uint64_t pa = 1;
            for (unsigned long i = 0; i < a; ++i)
                pa *= p;
            if (pa > 1000000)
                break;
            // solutions[y] counts z in [1, p^a] with z = y mod p and
            // z^(p-1) = 1 mod p^a
            std::vector<long> count(p, 0);
            std::vector<uint64_t> found(p, 0);
            for (uint64_t z = 1; z <= pa; ++z) {
                if (z % p == 0)
                    continue;
                if (verify_detail::powmod_u64(z, p - 1, pa) == 1) {
                    ++count[z % p];
                    found[z % p] = z;
                }
            }
            uint64_t lift = 1;
            for (unsigned long i = 0; i + 1 < a; ++i)
                lift *= p;  // p^(a-1)
            for (uint64_t y = 1; y < p; ++y) {
                ++res.cases;
                uint64_t expected = verify_detail::powmod_u64(y, lift, pa);
                if (count[y] != 1 || found[y] != expected)
                    res.fail("lemma9: p=" + std::to_string(p) + " a=" +
                             std::to_string(a) + " y=" + std::to_string(y));
            }
        }
    }
    res.elapsed_seconds = timer.seconds();
    return res;
}

// Brute-force scan: no n <= 1e8 has sigma(n)/n = 9/5 except n = 10.
// Independent of the search engine; divisor sums come from a segmented
// sieve over divisor pairs.
inline SuiteResult verify_prop2(unsigned long limit = 100000000) {
    verify_detail::Timer timer;
    SuiteResult res;
    res.name = "prop2";
    res.pass = true;
    std::vector<unsigned long> hits;
    const unsigned long block = 1 << 20;
    std::vector<uint64_t> s(block);
    for (unsigned long lo = 1; lo <= limit; lo += block) {
        unsigned long hi = std::min(limit + 1, lo + block);
        std::fill(s.begin(), s.begin() + (hi - lo), 0);
        for (unsigned long d = 1; d * d < hi; ++d) {
            unsigned long start = std::max((lo + d - 1) / d, d) * d;
            for (unsigned long n = start; n < hi; n += d) {
                unsigned long q = n / d;
                s[n - lo] += d;
                if (q != d)
                    s[n - lo] += q;
            }
        }
        for (unsigned long n = lo; n < hi; ++n) {
            ++res.cases;
            if (5 * s[n - lo] == 9ull * n)
                hits.push_back(n);
        }
    }
    if (hits.size() != 1 || hits[0] != 10) {
        std::string msg = "prop2: hits =";
        for (auto h : hits)
            msg += " " + std::to_string(h);
        res.fail(msg);
    }
    res.elapsed_seconds = timer.seconds();
    return res;
}

// Plants odd squares with omega(n) <= 4 and runs the engine against
// t = sigma_-1(n): some emitted event must be consistent with n.
inline SuiteResult verify_engine_oracle(const FactorOracle& oracle,
                                        uint64_t seed = 1, int targets = 50) {
    verify_detail::Timer timer;
    SuiteResult res;
    res.name = "engine-oracle";
    res.pass = true;
    auto primes = verify_detail::primes_up_to(1000);
    primes.erase(primes.begin());  // odd primes
    std::mt19937_64 rng(seed);

    for (int t_i = 0; t_i < targets; ++t_i) {
        std::uniform_int_distribution<size_t> kd(1, 4);
        size_t k = kd(rng);
        std::vector<unsigned long> ps = primes;
        std::shuffle(ps.begin(), ps.end(), rng);
        ps.resize(k);
        std::sort(ps.begin(), ps.end());
        std::uniform_int_distribution<unsigned long> ed(1, 3);
        std::vector<unsigned long> exps(k);  // exponent of p_i is 2*exps[i]
        for (auto& e : exps)
            e = ed(rng);

        Int n(1), max_pp(0);
        Rat t(1);
        std::map<Int, unsigned long> true_exp;
        for (size_t i = 0; i < k; ++i) {
            Int pp = pow_ui(Int(ps[i]), 2 * exps[i]);
            n *= pp;
            if (pp > max_pp)
                max_pp = pp;
            t *= sigma_ratio(ps[i], 2 * exps[i]);
            true_exp[Int(ps[i])] = 2 * exps[i];
        }

        RunConfig cfg;
        cfg.run_id = "oracle" + std::to_string(t_i);
        cfg.t_min = t;
        cfg.t_max = t;
        cfg.k = static_cast<long>(k);
        cfg.B = max_pp;
        cfg.P_init = Int(ps[0]) - 1;
        Factorization num = oracle.factor(Int(t.get_num()));
        if (!num.complete()) {
            res.fail("engine-oracle: could not factor target numerator");
            continue;
        }
        for (const auto& [p, e] : num.factors)
            cfg.ignored_primes.push_back(p);

        std::vector<TerminalEvent> interesting;
        RunOptions opts;
        opts.sink = [&](const TerminalEvent& ev) {
            if (ev.kind == EventKind::exact_solution ||
                ev.kind == EventKind::candidate)
                interesting.push_back(ev);
        };
        SearchReport rep = run_search(cfg, oracle, opts);
        ++res.cases;
        if (rep.inconclusive_count > 0) {
            res.fail("engine-oracle: inconclusive run for n=" + n.get_str());
            continue;
        }

        bool hit = false;
        for (const auto& ev : interesting) {
            bool ok = true;
            for (const auto& e : ev.state.on) {
                auto it = true_exp.find(e.p);
                if (it == true_exp.end() ||
                    (e.kind == OnEntry::Kind::exact && e.e != it->second) ||
                    (e.kind == OnEntry::Kind::min && e.e > it->second))
                    ok = false;
            }
            for (const auto& e : ev.state.off) {
                auto it = true_exp.find(e.p);
                if (it == true_exp.end() || e.b > it->second)
                    ok = false;
            }
            if (ok)
                hit = true;
        }
        if (!hit)
            res.fail("engine-oracle: no event consistent with n=" + n.get_str() +
                     " (events=" + std::to_string(interesting.size()) + ")");
    }
    res.elapsed_seconds = timer.seconds();
    return res;
}

inline std::vector<SuiteResult> run_verify_suites(const std::string& which,
                                                  const FactorOracle& oracle,
                                                  uint64_t seed = 1) {
    std::vector<SuiteResult> out;
    auto want = [&](const char* name) {
        return which == "all" || which == name;
    };
    if (want("lemma1"))
        out.push_back(verify_lemma1(oracle, seed));
    if (want("prop4"))
        out.push_back(verify_prop4(seed));
    if (want("prop5"))
        out.push_back(verify_prop5());
    if (want("prop6"))
        out.push_back(verify_prop6(oracle));
    if (want("cor7"))
        out.push_back(verify_cor7());
    if (want("lemma9"))
        out.push_back(verify_lemma9());
    if (want("prop2"))
        out.push_back(verify_prop2());
    if (want("engine-oracle"))
        out.push_back(verify_engine_oracle(oracle, seed));
    if (out.empty())
        throw ConfigError({"unknown verify suite '" + which + "'"});
    return out;
}

}  // namespace factorchain
