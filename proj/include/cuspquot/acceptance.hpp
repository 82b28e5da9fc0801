/**
 * @file acceptance.hpp
 * @brief The acceptance suite: nine criteria, each a pass/fail line.
 *
 * Quick level runs the symbolic parts only; full level adds every
 * brute-force comparison. Expected closed forms are frozen here.
 */
#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cache.hpp"
#include "groebner.hpp"
#include "oracles.hpp"
#include "qalgebra.hpp"
#include "series.hpp"
#include "strata.hpp"
#include "varieties.hpp"

namespace cuspquot {

enum class Level { quick, full };

struct CriterionResult {
    int id = 0;
    std::string title;
    bool ran = true;  // false when the level skips the criterion entirely
    bool pass = false;
    bool partial = false;  // quick level ran only the symbolic part
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    Level level = Level::full;
    ResultCache* cache = nullptr;
    std::uint64_t seed = 0x5eed2024;
    std::uint64_t budget = kDefaultBudget;
};

namespace accept {

/// Collects individual checks and the first few failures.
struct Tally {
    int checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
    bool pass() const { return failures.empty(); }
    std::string detail() const {
        if (pass()) return std::to_string(checks) + " checks";
        std::string s = std::to_string(failures.size()) + "/" + std::to_string(checks) + " failed: ";
        for (size_t i = 0; i < failures.size() && i < 3; ++i) s += (i ? "; " : "") + failures[i];
        return s;
    }
};

/// Polynomial in q from (exponent, coefficient) pairs.
inline LaurentPoly qp(std::initializer_list<std::pair<int, long long>> terms) {
    LaurentPoly r;
    for (const auto& [e, c] : terms) r += LaurentPoly::monomial(c, e);
    return r;
}

inline BigInt cached(const AcceptanceOptions& o, const std::string& kind, const std::string& params,
                     const std::function<BigInt()>& f) {
    return o.cache ? o.cache->memoize(kind, params, f) : f();
}

inline std::string pname(int d, int n, Fe p) {
    return "d=" + std::to_string(d) + ",n=" + std::to_string(n) + ",p=" + std::to_string(p);
}

/// (t;q)_d written out as an explicit product.
inline TPoly explicit_denominator(int d) {
    TPoly r = 1;
    for (int i = 0; i < d; ++i) r *= TPoly(std::vector<LaurentPoly>{1, -LaurentPoly::q(i)});
    return r;
}

inline std::vector<TPoly> expected_nh() {
    return {
        TPoly(1),
        TPoly(std::vector<LaurentPoly>{1, qp({{1, 1}})}),
        TPoly(std::vector<LaurentPoly>{1, qp({{2, 1}, {3, 1}}), qp({{4, 1}})}),
        TPoly(std::vector<LaurentPoly>{1, qp({{3, 1}, {4, 1}, {5, 1}}), qp({{6, 1}, {7, 1}, {8, 1}}), qp({{9, 1}})}),
    };
}

inline std::vector<TPoly> expected_nq() {
    return {
        TPoly(1),
        TPoly(std::vector<LaurentPoly>{1, 0, qp({{1, 1}})}),
        TPoly(std::vector<LaurentPoly>{1, 0, qp({{2, 1}, {3, 1}}), 0, qp({{4, 1}})}),
        TPoly(std::vector<LaurentPoly>{1, 0, qp({{3, 1}, {4, 1}, {5, 1}}), 0, qp({{6, 1}, {7, 1}, {8, 1}}), 0, qp({{9, 1}})}),
    };
}

inline std::vector<LaurentPoly> expected_staircase() {
    return {
        1,
        1,
        qp({{2, 1}}),
        qp({{4, 3}, {3, -2}}),
        qp({{8, 2}, {7, 3}, {6, -5}, {5, 1}}),
        qp({{12, 10}, {11, -5}, {10, -9}, {9, 5}}),
        qp({{18, 5}, {17, 21}, {16, -30}, {15, -9}, {14, 15}, {12, -1}}),
        qp({{24, 35}, {23, 7}, {22, -84}, {21, 15}, {20, 35}, {18, -7}}),
        qp({{32, 14}, {31, 112}, {30, -112}, {29, -162}, {28, 113}, {27, 70}, {26, -7}, {25, -28}, {22, 1}}),
    };
}

/// Pure-K class rows keyed by (d12) or (d12, d23, d13), classes 1 = "at most 1", 3 = "at least 3".
inline std::map<std::vector<int>, LaurentPoly> expected_pure_k() {
    return {
        {{1}, 1},
        {{2}, qp({{1, 1}})},
        {{3}, qp({{2, 1}})},
        {{1, 1, 1}, 1},
        {{1, 1, 2}, qp({{1, 1}})},
        {{1, 1, 3}, qp({{2, 1}})},
        {{1, 2, 2}, qp({{2, 1}})},
        {{1, 2, 3}, qp({{3, 1}})},
        {{1, 3, 3}, qp({{4, 1}})},
        {{2, 1, 2}, qp({{2, 1}})},
        {{2, 1, 3}, qp({{3, 1}})},
        {{2, 2, 3}, qp({{4, 1}})},
        {{2, 3, 3}, qp({{4, 2}, {3, -1}})},
        {{3, 1, 3}, qp({{4, 1}})},
        {{3, 2, 3}, qp({{4, 2}, {3, -1}})},
        {{3, 3, 3}, qp({{4, 3}, {3, -2}})},
    };
}

/// One pure-K datum per distance-class key, levels <= 6.
inline std::map<std::vector<int>, LeadingTermDatum> pure_k_representatives(int d) {
    std::map<std::vector<int>, LeadingTermDatum> reps;
    Levels x(static_cast<size_t>(d), 0);
    std::vector<Color> ks(static_cast<size_t>(d), Color::K);
    std::function<void(int)> rec = [&](int i) {
        if (i == d) {
            LeadingTermDatum a(x, ks);
            reps.emplace(v_alpha_spec(a).table_key(), a);
            return;
        }
        for (int l = 0; l <= 6; ++l) {
            x[static_cast<size_t>(i)] = l;
            rec(i + 1);
        }
    };
    rec(0);
    return reps;
}

inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// ---------------------------------------------------------------------------

inline Tally exact_formulas() {
    Tally t;
    auto nh_exp = expected_nh();
    auto nq_exp = expected_nq();
    for (int d = 0; d <= 3; ++d) {
        TSeries h = hilb_series(d), q = quot_series(d);
        std::string ds = std::to_string(d);
        t.expect(h.den == explicit_denominator(d), "H" + ds + " denominator");
        t.expect(q.den == explicit_denominator(d), "Q" + ds + " denominator");
        t.expect(h.num == nh_exp[static_cast<size_t>(d)], "H" + ds + " numerator " + h.num.to_string());
        t.expect(q.num == nq_exp[static_cast<size_t>(d)], "Q" + ds + " numerator " + q.num.to_string());
        t.expect(nh(d) == nh_guess(d), "NH" + ds + " closed form");
        t.expect(nq(d) == nh(d).compose_power(2), "NQ" + ds + "(t) = NH" + ds + "(t^2)");
        t.expect(hilb_from_quot(d) == h, "H" + ds + " from Q_0..Q_" + ds);
    }
    return t;
}

inline Tally staircase(const AcceptanceOptions& o) {
    Tally t;
    auto table = expected_staircase();
    for (int d = 0; d <= 8; ++d)
        t.expect(staircase_motive(d) == table[static_cast<size_t>(d)], "[V_" + std::to_string(d) + "] table row");
    for (int d = 0; d <= 12; ++d) t.expect(staircase_motive(d).sum_of_coeffs() == 1, "[V_" + std::to_string(d) + "] at q=1");
    if (o.level == Level::full) {
        for (auto [dmax, p] : {std::pair<int, Fe>{4, 2}, {3, 3}})
            for (int d = 0; d <= dmax; ++d) {
                BigInt brute = cached(o, "vd", "d=" + std::to_string(d) + ",p=" + std::to_string(p),
                                      [&] { return brute_v_d(d, p, o.budget); });
                t.expect(brute == staircase_motive(d).evaluate_int(p), "|V_" + std::to_string(d) + "(F_" + std::to_string(p) + ")|");
            }
    }
    return t;
}

inline Tally pure_k(const AcceptanceOptions& o) {
    Tally t;
    auto rows = expected_pure_k();
    std::set<std::vector<int>> seen;
    for (int d : {2, 3}) {
        auto reps = pure_k_representatives(d);
        t.expect(reps.size() == (d == 2 ? 3u : 13u), "number of realised classes for d=" + std::to_string(d));
        for (const auto& [key, alpha] : reps) {
            seen.insert(key);
            auto it = rows.find(key);
            if (it == rows.end()) {
                t.expect(false, "class of " + alpha.to_string() + " has no table row");
                continue;
            }
            t.expect(symbolic_v_alpha(alpha) == it->second, "symbolic class of " + alpha.to_string());
            if (o.level == Level::full)
                for (Fe p : {2u, 3u, 5u}) {
                    BigInt c = cached(o, "valpha", alpha.to_string() + ",p=" + std::to_string(p),
                                      [&] { return count_v_alpha(alpha, p, o.budget); });
                    t.expect(c == it->second.evaluate_int(p), "|V(" + alpha.to_string() + ")(F_" + std::to_string(p) + ")|");
                }
        }
    }
    t.expect(seen.size() == rows.size(), "every table row realised");
    return t;
}

inline Tally groebner_trials(const AcceptanceOptions& o) {
    Tally t;
    std::mt19937_64 rng(o.seed);
    std::vector<std::vector<LeadingTermDatum>> data(4);
    for (int d = 1; d <= 3; ++d)
        for (const auto& a : enumerate_data(d, 4))
            if (a.n() >= 1) data[static_cast<size_t>(d)].push_back(a);
    int nontrivial = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::string tag = "trial " + std::to_string(trial);
        try {
            Fe p = trial % 2 ? 3 : 2;
            int d = 1 + static_cast<int>(pick(rng, 3));
            const auto& pool = data[static_cast<size_t>(d)];
            const LeadingTermDatum& alpha = pool[pick(rng, pool.size())];
            PrimeField f(p);
            auto slots = stratum_slots(alpha);
            // sample a standard basis with this leading datum by rejection
            std::vector<Element> G;
            for (int attempt = 0; attempt < 400; ++attempt) {
                std::vector<std::vector<Fe>> tails;
                for (const auto& s : slots) {
                    tails.emplace_back();
                    for (size_t k = 0; k < s.tail.size(); ++k) tails.back().push_back(static_cast<Fe>(pick(rng, p)));
                }
                auto cand = build_prebasis(alpha, p, slots, tails);
                if (is_groebner(cand)) {
                    G = std::move(cand);
                    break;
                }
            }
            if (G.empty()) {
                std::vector<std::vector<Fe>> zero;
                for (const auto& s : slots) zero.emplace_back(s.tail.size(), 0);
                G = build_prebasis(alpha, p, slots, zero);
            }
            for (const auto& g : G)
                if (g.terms().size() > 1) {
                    ++nontrivial;
                    break;
                }
            t.expect(is_prebasis(G), tag + ": prebasis shape");
            t.expect(is_groebner(G) == is_groebner_general(G), tag + ": cusp and general criteria agree");
            // another presentation: unit diagonal plus m-adic mixing, plus redundant combinations
            std::vector<Element> H;
            auto random_mix = [&](Element h) {
                for (const auto& g : G)
                    for (int k = 2; k < 6; ++k) h.add_multiple(g, static_cast<Fe>(pick(rng, p)), k);
                return h;
            };
            for (const auto& g : G) H.push_back(random_mix(g.scaled(static_cast<Fe>(1 + pick(rng, p - 1)))));
            for (int extra = 0; extra < 2; ++extra) {
                Element e = random_mix(Element(G[0].d(), G[0].trunc(), p));
                if (!e.is_zero()) H.push_back(e);
            }
            std::shuffle(H.begin(), H.end(), rng);
            ReducedGB expect(G), got = reduce(H);
            t.expect(got == expect, tag + ": reduced basis of " + alpha.to_string());
            t.expect(got.codim() == alpha.n() && span_codim(H) == alpha.n(), tag + ": codimension");
            for (const auto& h : H) {
                Division dv = divide(h, expect.generators());
                t.expect(division_is_sound(h, expect.generators(), dv) && dv.remainder.is_zero(), tag + ": division of a generator");
            }
            Element r(G[0].d(), G[0].trunc(), p);
            for (size_t i = 0; i < r.size(); ++i) r.set(r.monomial_at(i), static_cast<Fe>(pick(rng, p)));
            t.expect(division_is_sound(r, expect.generators(), divide(r, expect.generators())), tag + ": division of a random element");
        } catch (const std::exception& e) {
            t.expect(false, tag + ": " + e.what());
        }
    }
    t.expect(nontrivial >= 50, "only " + std::to_string(nontrivial) + " trials had a non-monomial basis");
    return t;
}

/// (d, n, p) cases compared against the subspace enumeration.
inline std::vector<std::tuple<int, int, Fe>> oracle_cases() {
    std::vector<std::tuple<int, int, Fe>> c;
    for (int d = 1; d <= 2; ++d)
        for (int n = 0; n <= 2; ++n) c.emplace_back(d, n, 2);
    for (int n = 3; n <= 4; ++n) c.emplace_back(1, n, 2);
    for (int n = 0; n <= 3; ++n) c.emplace_back(1, n, 3);
    return c;
}

inline Tally oracle_equivalence(const AcceptanceOptions& o) {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    for (auto [d, n, p] : oracle_cases()) {
        LaurentPoly h = hilb_series(d, Mode::at_prime(p)).expand(n)[static_cast<size_t>(n)];
        BigInt brute = cached(o, "quot", pname(d, n, p), [&] { return BigInt(count_quot_bruteforce(d, n, p, o.budget)); });
        t.expect(h.is_constant() && h.coeff(0) == brute, "[t^n]H_d vs subspaces at " + pname(d, n, p));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.expect(secs <= 300.0, "runtime " + std::to_string(secs) + " s exceeds 300 s");
    return t;
}

inline Tally cohen_lenstra(const AcceptanceOptions& o) {
    Tally t;
    for (int n = 0; n <= 10; ++n)
        t.expect(global_count_from_guess(n) == RationalQ(matrix_count_formula(n)), "guess vs matrix count, n=" + std::to_string(n));
    auto z = zhat_truncation(3);
    for (int n = 0; n <= 3; ++n) t.expect(z[static_cast<size_t>(n)] == cohen_lenstra_guess_coeff(n), "[t^n]zhat vs guess, n=" + std::to_string(n));
    if (o.level == Level::full) {
        for (Fe p : {2u, 3u}) {
            auto zp = zhat_truncation(3, Mode::at_prime(p));
            for (int n = 0; n <= 3; ++n) {
                std::string np = "n=" + std::to_string(n) + ",p=" + std::to_string(p);
                BigInt nil = cached(o, "nilpairs", np, [&] { return count_nilpotent_pairs(n, p, o.budget); });
                BigInt all = cached(o, "allpairs", np, [&] { return count_all_pairs(n, p, o.budget); });
                t.expect(RationalQ(LaurentPoly(nil)) == zp[static_cast<size_t>(n)] * RationalQ(LaurentPoly(gl_count(n, p))),
                         "nilpotent pairs / |GL_n| vs zhat at " + np);
                t.expect(all == matrix_count_formula(n).evaluate_int(BigInt(p)), "all pairs vs formula at " + np);
            }
        }
        // n = 4 at p = 2 reaches the per-prime H_4
        auto z4 = zhat_truncation(4, Mode::at_prime(2));
        BigInt nil4 = cached(o, "nilpairs", "n=4,p=2", [&] { return count_nilpotent_pairs(4, 2, o.budget); });
        t.expect(RationalQ(LaurentPoly(nil4)) == z4[4] * RationalQ(LaurentPoly(gl_count(4, 2))),
                 "nilpotent pairs / |GL_n| vs zhat at n=4,p=2");
        t.expect(BigRational(nil4) == cohen_lenstra_guess_coeff(4).evaluate(2) * BigRational(gl_count(4, 2)),
                 "nilpotent pairs vs guess at n=4,p=2");
    }
    return t;
}

inline Tally combinatorics(const AcceptanceOptions& o) {
    Tally t;
    std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ull);
    for (int trial = 0; trial < 500; ++trial) {
        int d = 1 + static_cast<int>(pick(rng, 6));
        Levels x(static_cast<size_t>(d));
        for (auto& l : x) l = static_cast<int>(pick(rng, 6));
        int i = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(d)));
        int j = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(d)));
        t.expect(gamma(i, gamma(j, x)) == gamma(j, gamma(i, x)), "gamma commutativity");
    }
    for (int d = 1; d <= 4; ++d) {
        Levels x(static_cast<size_t>(d), 0);
        std::function<void(int)> rec = [&](int k) {
            if (k == d) {
                auto a = orbit_address(x);
                t.expect(apply_address(a) == x, "address of a level vector");
                t.expect(orbit_address(apply_address(x)) == x, "address of an applied word");
                for (int j = 1; j <= d; ++j) t.expect(static_cast<int>(stretches(j, x).size()) == j - 1, "stretch count");
                return;
            }
            for (int l = 0; l <= 4; ++l) {
                x[static_cast<size_t>(k)] = l;
                rec(k + 1);
            }
        };
        rec(0);
    }
    for (int d = 1; d <= 4; ++d)
        for (const auto& a : enumerate_data(d, d <= 3 ? 5 : 4))
            for (int j = 1; j <= d; ++j) {
                LeadingTermDatum g = gamma(j, a);
                t.expect(g.n() == a.n() + 1, "n under gamma");
                t.expect(exponents(g).second == exponents(a).second + (j - 1) - obstructed_stretches(j, a),
                         "delta update at " + a.to_string() + ", j=" + std::to_string(j));
            }
    if (o.level == Level::full) {
        const Fe p = 2;
        for (int d = 1; d <= 3; ++d)
            for (const auto& a : enumerate_data(d, 3))
                for (int j = 1; j <= d; ++j) {
                    if (!is_stable(j, a)) continue;
                    LeadingTermDatum g = gamma(j, a);
                    BigInt ca = cached(o, "stratum", a.to_string() + ",p=2", [&] { return count_stratum_bruteforce(a, p, o.budget); });
                    BigInt cg = cached(o, "stratum", g.to_string() + ",p=2", [&] { return count_stratum_bruteforce(g, p, o.budget); });
                    t.expect(cg == ca * ipow(BigInt(p), static_cast<unsigned>(j - 1)),
                             "scaling at " + a.to_string() + ", j=" + std::to_string(j));
                }
    }
    return t;
}

inline Tally conjecture_machinery() {
    Tally t;
    auto chain = solve_nh_chain(8);
    t.expect(chain.size() == 9, "solve chain reached d=8");
    for (size_t d = 0; d < chain.size(); ++d) {
        t.expect(chain[d].consistent, chain[d].message);
        t.expect(chain[d].poly == nh_guess(static_cast<int>(d)), "solved NH_" + std::to_string(d) + " vs closed form");
    }
    TPoly nh4(std::vector<LaurentPoly>{1, qp({{4, 1}, {5, 1}, {6, 1}, {7, 1}}), qp({{8, 1}, {9, 1}, {10, 2}, {11, 1}, {12, 1}}),
                                       qp({{12, 1}, {13, 1}, {14, 1}, {15, 1}}), qp({{16, 1}})});
    t.expect(chain.size() > 4 && chain[4].poly == nh4, "NH_4 value");
    for (int d = 0; d <= 12; ++d) t.expect(functional_equation_check(d, nh_guess(d)), "functional equation d=" + std::to_string(d));
    for (int d = 1; d <= 8; ++d) {
        for (int r = 1; r <= d; ++r)
            if (d % r == 0) t.expect(root_of_unity_check(d, r), "root of unity d=" + std::to_string(d) + ", r=" + std::to_string(r));
        t.expect(cyclotomic_divisibility_check(d), "cyclotomic divisibility d=" + std::to_string(d));
    }
    return t;
}

inline Tally homological(const AcceptanceOptions& o) {
    Tally t;
    const Fe p = 2;
    int points = 0;
    PrimeField f(p);
    for (int d = 1; d <= 4; ++d) {
        for_each_pattern_point(staircase_spec(d), p, o.budget, [&](const GFMatrix& X, const GFMatrix& Y) {
            ++points;
            AbProfile r = ab_profile(X, Y);
            std::string tag = "d=" + std::to_string(d) + " point " + std::to_string(points);
            t.expect(r.a + r.b == 2 * d, tag + ": a+b=2d");
            t.expect(2 * r.w1 == r.a + r.b, tag + ": w1=(a+b)/2");
            t.expect(r.w0 == r.b && r.w2 == r.a, tag + ": w0=b, w2=a");
            t.expect(r.ker_a_prime == r.a && r.im_a_prime == r.b, tag + ": A and A' symmetry");
            t.expect(r.t_exact, tag + ": exactness of T");
            if (d == 4) return;
            auto w = w_filtration(X, Y);
            const int n = 2 * d;
            auto in_span = [&](const std::vector<std::vector<Fe>>& basis, const std::vector<Fe>& v) {
                auto both = basis;
                both.push_back(v);
                return detail::span_dim(both, n, p) == detail::span_dim(basis, n, p);
            };
            for_each_in_span(w.w2, static_cast<size_t>(n), p, o.budget, [&](const std::vector<Fe>& u) {
                auto [X1, Y1] = extend_point(X, Y, u);
                if (!in_staircase(X1, Y1)) {
                    t.expect(false, tag + ": extension by a kernel vector leaves V");
                    return;
                }
                AbProfile e = ab_profile(X1, Y1);
                std::pair<int, int> want = in_span(w.w0, u) ? std::pair{r.a + 2, r.b}
                                           : in_span(w.w1, u) ? std::pair{r.a + 1, r.b + 1}
                                                              : std::pair{r.a, r.b + 2};
                t.expect(std::pair{e.a, e.b} == want, tag + ": extension case table");
            });
        });
    }
    t.expect(points >= 200, "sampled " + std::to_string(points) + " points");
    return t;
}

}  // namespace accept

inline const std::vector<std::string>& criterion_titles() {
    static const std::vector<std::string> titles = {
        "exact formulas H_d, Q_d, NH_d, NQ_d for d <= 3",
        "staircase motives [V_d]",
        "pure-K class tables",
        "standard basis properties",
        "oracle equivalence [t^n]H_d vs subspace enumeration",
        "Cohen-Lenstra chain and matrix counts",
        "datum combinatorics and stability scaling",
        "conjecture machinery",
        "homological identities on V_d",
    };
    return titles;
}

/// Run the criteria in order; exceptions count as failures.
inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o) {
    using accept::Tally;
    const bool full = o.level == Level::full;
    std::vector<std::function<Tally()>> runners = {
        [] { return accept::exact_formulas(); },
        [&] { return accept::staircase(o); },
        [&] { return accept::pure_k(o); },
        [&] { return accept::groebner_trials(o); },
        [&] { return accept::oracle_equivalence(o); },
        [&] { return accept::cohen_lenstra(o); },
        [&] { return accept::combinatorics(o); },
        [] { return accept::conjecture_machinery(); },
        [&] { return accept::homological(o); },
    };
    // criteria with no symbolic part at all
    const std::set<int> oracle_only = {4, 5, 9};
    std::vector<CriterionResult> out;
    for (size_t i = 0; i < runners.size(); ++i) {
        CriterionResult r;
        r.id = static_cast<int>(i) + 1;
        r.title = criterion_titles()[i];
        if (!full && oracle_only.count(r.id)) {
            r.ran = false;
            r.detail = "skipped at quick level";
            out.push_back(r);
            continue;
        }
        r.partial = !full && (r.id == 2 || r.id == 3 || r.id == 6 || r.id == 7);
        auto start = std::chrono::steady_clock::now();
        try {
            Tally t = runners[i]();
            r.pass = t.pass();
            r.detail = t.detail();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.id == 1 && r.seconds >= 10.0) {
            r.pass = false;
            r.detail += "; exceeded 10 s";
        }
        out.push_back(r);
    }
    return out;
}

/// "PASS  3  title  (detail, 0.12 s)" per line.
inline std::string format_results(const std::vector<CriterionResult>& rs, bool with_times = true) {
    std::ostringstream os;
    for (const auto& r : rs) {
        os << (r.ran ? (r.pass ? "PASS" : "FAIL") : "SKIP") << "  " << r.id << "  " << r.title;
        if (r.partial) os << " [symbolic part]";
        os << "  (" << r.detail;
        if (with_times && r.ran) {
            std::ostringstream s;
            s.setf(std::ios::fixed);
            s.precision(2);
            s << r.seconds;
            os << ", " << s.str() << " s";
        }
        os << ")\n";
    }
    return os.str();
}

inline bool all_passed(const std::vector<CriterionResult>& rs) {
    for (const auto& r : rs)
        if (r.ran && !r.pass) return false;
    return true;
}

}  // namespace cuspquot
