/**
 * @file test_groebner.cpp
 * @brief Monomial order, division, the two standard-basis criteria, reduction.
 */
#include <functional>
#include <random>

#include "doctest.h"

#include "cuspquot/groebner.hpp"
#include "cuspquot/oracles.hpp"
#include "cuspquot/strata.hpp"

using namespace cuspquot;

namespace {

/// Visit every reduced prebasis with leading datum alpha over F_p.
void for_each_prebasis(const LeadingTermDatum& alpha, Fe p, const std::function<void(const std::vector<Element>&)>& visit) {
    auto slots = stratum_slots(alpha);
    std::vector<std::vector<Fe>> tails;
    std::vector<std::pair<size_t, size_t>> free;
    for (size_t i = 0; i < slots.size(); ++i) {
        tails.emplace_back(slots[i].tail.size(), 0);
        for (size_t k = 0; k < slots[i].tail.size(); ++k) free.emplace_back(i, k);
    }
    detail::for_each_digits(free.size(), p, [&](const std::vector<Fe>& dig) {
        for (size_t s = 0; s < free.size(); ++s) tails[free[s].first][free[s].second] = dig[s];
        visit(build_prebasis(alpha, p, slots, tails));
    });
}

/// Membership by linear algebra: f lies in the F_p-span of all T^k g.
bool in_span(const Element& f, const std::vector<Element>& G) {
    std::vector<std::vector<Fe>> cols;
    for (const auto& g : G)
        for (int k = 0; k < f.trunc(); ++k)
            if (in_semigroup(k)) cols.push_back(g.times_T(k).coeffs());
    int dim = static_cast<int>(f.size());
    int r = rank(GFMatrix::from_columns(cols, dim, f.prime()));
    cols.push_back(f.coeffs());
    return rank(GFMatrix::from_columns(cols, dim, f.prime())) == r;
}

Element random_element(int d, int N, Fe p, std::mt19937_64& rng) {
    Element e(d, N, p);
    for (int t = 2; t < N; ++t)
        for (int i = 1; i <= d; ++i) e.set({t, i}, static_cast<Fe>(rng() % p));
    return e;
}

}  // namespace

TEST_CASE("monomial order has type omega") {
    Element e(3, 9, 2);
    for (size_t i = 0; i + 1 < e.size(); ++i) CHECK(e.monomial_at(i) < e.monomial_at(i + 1));
    // exactly (t - 2) d + (i - 1) monomials of m·F lie below T^t u_i
    CHECK(*e.index_of({5, 2}) == 10);
    CHECK(Monomial{3, 3} < Monomial{4, 1});
    CHECK(Monomial{4, 1} < Monomial{4, 2});
}

TEST_CASE("divisibility in k[[T^2, T^3]]") {
    CHECK(divides({2, 1}, {4, 1}) == 2);
    CHECK(divides({2, 1}, {2, 1}) == 0);
    CHECK(!divides({2, 1}, {3, 1}));
    CHECK(!divides({2, 1}, {4, 2}));
    CHECK(!divides({4, 1}, {2, 1}));
    CHECK(lcm_set({5, 1}, {6, 1}) == std::vector<Monomial>{{8, 1}, {9, 1}});
    CHECK(lcm_set({5, 1}, {7, 1}) == std::vector<Monomial>{{7, 1}});
    CHECK(lcm_set({5, 1}, {7, 2}).empty());
}

TEST_CASE("division examples") {
    const int d = 1, N = 8;
    const Fe p = 3;
    Element g = Element::monomial(d, N, p, {2, 1});
    g.set({3, 1}, 1);  // T^2 + T^3
    // T^4 = T^2 (T^2 + T^3) - T^3 (T^2 + T^3) + ... lies in R·g
    auto dv = divide(Element::monomial(d, N, p, {4, 1}), {g});
    CHECK(dv.remainder.is_zero());
    CHECK(dv.quotients[0][2] == 1);
    CHECK(dv.quotients[0][3] == 2);
    // T^3 does not: the quotient would need T^1
    auto dv3 = divide(Element::monomial(d, N, p, {3, 1}), {g});
    CHECK(dv3.remainder == Element::monomial(d, N, p, {3, 1}));
    CHECK(g.to_string() == "T^2*u1 + T^3*u1");
}

TEST_CASE("division expressions are sound on random input") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int d = 1 + static_cast<int>(rng() % 3), N = 6 + static_cast<int>(rng() % 4);
        Fe p = trial % 2 ? 3 : 2;
        std::vector<Element> G;
        int k = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) {
            Element g = random_element(d, N, p, rng);
            if (!g.is_zero()) G.push_back(g);
        }
        if (G.empty()) continue;
        Element f = random_element(d, N, p, rng);
        CHECK(division_is_sound(f, G, divide(f, G)));
    }
}

TEST_CASE("cusp criterion agrees with the general criterion") {
    // all reduced prebases with d <= 2 over F_2 and codimension <= 3
    int total = 0, groebner = 0;
    for (int d = 1; d <= 2; ++d)
        for (const auto& alpha : enumerate_data(d, 3)) {
            if (alpha.n() == 0) continue;
            for_each_prebasis(alpha, 2, [&](const std::vector<Element>& G) {
                REQUIRE(is_prebasis(G));
                bool fast = is_groebner(G), slow = is_groebner_general(G);
                CHECK(fast == slow);
                ++total;
                if (fast) {
                    ++groebner;
                    CHECK(span_codim(G) == alpha.n());
                }
            });
        }
    CHECK(total > groebner);
    CHECK(groebner > 0);
}

TEST_CASE("standard sets of monomial submodules") {
    // K(1) in rank 1: generators T^3, T^4
    auto k1 = LeadingTermDatum::parse("(K(1))");
    std::vector<Element> G;
    for (const auto& m : k1.corners()) G.push_back(Element::monomial(1, 6, 2, m));
    ReducedGB gb(G);
    CHECK(gb.codim() == 1);
    CHECK(gb.standard_monomials() == std::vector<Monomial>{{2, 1}});
    // J(2): generator T^3 alone, standard T^2 and T^4
    auto j2 = LeadingTermDatum::parse("(J(2))");
    ReducedGB gj({Element::monomial(1, 8, 2, j2.corners()[0])});
    CHECK(gj.standard_monomials() == std::vector<Monomial>{{2, 1}, {4, 1}});
    CHECK(gj.standard_monomials() == j2.standard_set());
    CHECK(ReducedGB({Element::monomial(1, 8, 2, {4, 1})}).codim() == 3);
    CHECK_THROWS_AS(ReducedGB({Element::monomial(2, 8, 2, {4, 1})}).codim(), std::domain_error);
}

TEST_CASE("reduction recovers the reduced basis and is idempotent") {
    std::mt19937_64 rng(5);
    for (const auto& alpha : enumerate_data(2, 3)) {
        if (alpha.n() == 0) continue;
        for (Fe p : {2u, 3u}) {
            std::vector<std::vector<Element>> bases;
            if (p == 2)
                for_each_prebasis(alpha, p, [&](const std::vector<Element>& G) {
                    if (is_groebner(G)) bases.push_back(G);
                });
            else {
                // random tails at p = 3
                for (int k = 0; k < 30; ++k) {
                    auto slots = stratum_slots(alpha);
                    std::vector<std::vector<Fe>> tails;
                    for (const auto& s : slots) {
                        std::vector<Fe> t(s.tail.size());
                        for (auto& x : t) x = static_cast<Fe>(rng() % p);
                        tails.push_back(t);
                    }
                    auto G = build_prebasis(alpha, p, slots, tails);
                    if (is_groebner(G)) bases.push_back(G);
                }
            }
            for (const auto& G : bases) {
                ReducedGB expect(G);
                // unitriangular change of generators keeps the submodule
                std::vector<Element> mixed = G;
                for (size_t i = 0; i < mixed.size(); ++i) {
                    for (size_t j = 0; j < i; ++j) {
                        int k = 2 + static_cast<int>(rng() % 3);
                        mixed[i].add_multiple(G[j], static_cast<Fe>(rng() % p), k);
                    }
                    mixed[i] = mixed[i].scaled(1 + static_cast<Fe>(rng() % (p - 1)));
                }
                ReducedGB got = reduce(mixed);
                CHECK(got == expect);
                CHECK(reduce(got.generators()) == got);
                CHECK(got.codim() == alpha.n());
                for (int trial = 0; trial < 5; ++trial) {
                    Element f = random_element(alpha.d(), G[0].trunc(), p, rng);
                    CHECK(membership(f, got) == in_span(f, G));
                    CHECK(membership(f.times_T(2), got) == in_span(f.times_T(2), G));
                }
                for (const auto& g : G) CHECK(membership(g.times_T(3), got));
            }
        }
    }
}
