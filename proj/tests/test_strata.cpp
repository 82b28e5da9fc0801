/**
 * @file test_strata.cpp
 * @brief Leading-term data, spiral raising, distances, stretches, stability, orbits.
 */
#include <map>
#include <random>
#include <set>

#include "doctest.h"

#include "cuspquot/strata.hpp"

using namespace cuspquot;

namespace {

LeadingTermDatum dat(const std::string& s) { return LeadingTermDatum::parse(s); }

}  // namespace

TEST_CASE("parse and print data") {
    auto a = dat("(K(1), J(1), K(0))");
    CHECK(a.to_string() == "(K(1),J(1),K(0))");
    CHECK(a.levels() == Levels{1, 0, 0});
    // ranked: J(1)u2, K(0)u3, K(1)u1
    CHECK(a.rank_order() == std::vector<int>{2, 3, 1});
    CHECK(a.colors() == std::vector<Color>{Color::J, Color::K, Color::K});
    CHECK(a.n() == 2);
    CHECK_THROWS_AS(dat("(J(0))"), std::invalid_argument);
    CHECK_THROWS_AS(dat("(K(1),L(2))"), std::invalid_argument);
    CHECK_THROWS_AS(dat("K(1)"), std::invalid_argument);
    for (const auto& x : enumerate_data(3, 4)) CHECK(dat(x.to_string()) == x);
}

TEST_CASE("corners and standard sets") {
    auto a = dat("(K(0),K(2),J(2))");
    CHECK(a.corners() == std::vector<Monomial>{{2, 1}, {3, 1}, {3, 3}, {4, 2}, {5, 2}});
    CHECK(a.standard_set() == std::vector<Monomial>{{2, 2}, {2, 3}, {3, 2}, {4, 3}});
    CHECK(a.n() == 4);
    CHECK(dat("(K(0))").standard_set().empty());
    CHECK(dat("(J(1))").standard_set() == std::vector<Monomial>{{3, 1}});
    for (const auto& x : enumerate_data(3, 5)) CHECK(static_cast<int>(x.standard_set().size()) == x.n());
    // (K,J,K) ranked colors carry a single (K, J) pair
    auto [b, delta] = exponents(a);
    CHECK(b == 1);
    // Δ above T^2u1: all four; above T^4u2: T^4u3; above T^3u3: T^4u3 (and T^3u2 lies below)
    CHECK(delta == 4 + 1 + 1);
}

TEST_CASE("spiral raising examples") {
    CHECK(gamma(5, Levels{2, 3, 1, 2, 0, 3, 1}) == Levels{2, 4, 1, 3, 0, 2, 1});
    auto a = dat("(K(1),J(1),K(0))");
    CHECK(gamma(1, a).to_string() == "(K(1),K(1),J(1))");
    CHECK(gamma(2, a).to_string() == "(K(1),J(1),K(1))");
    CHECK(gamma(3, a).to_string() == "(K(2),J(1),K(0))");
    CHECK(gamma(1, Levels{0, 0}) == Levels{1, 0});
    CHECK(gamma(2, Levels{0, 0}) == Levels{0, 1});
    CHECK_THROWS_AS(gamma(0, Levels{0}), std::out_of_range);
    CHECK_THROWS_AS(gamma(3, Levels{0, 0}), std::out_of_range);
}

TEST_CASE("addresses") {
    CHECK(orbit_address(Levels{0, 0, 0}) == std::vector<int>{0, 0, 0});
    CHECK(orbit_address(Levels{1, 0}) == std::vector<int>{1, 0});
    CHECK(orbit_address(Levels{0, 1}) == std::vector<int>{0, 1});
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        int d = 1 + static_cast<int>(rng() % 5);
        std::vector<int> a(static_cast<size_t>(d));
        for (auto& v : a) v = static_cast<int>(rng() % 5);
        CHECK(orbit_address(apply_address(a)) == a);
        Levels x = apply_address(a);
        for (int j = 1; j <= d; ++j) CHECK(gamma_inverse(j, gamma(j, x)) == x);
    }
}

TEST_CASE("stretches change distances by exactly one") {
    CHECK(stretches(1, Levels{2, 3, 1, 2, 0, 3, 1}).empty());
    auto s5 = stretches(5, Levels{2, 3, 1, 2, 0, 3, 1});
    REQUIRE(s5.size() == 4);
    std::set<int> lower;
    for (const auto& [b, h] : s5) lower.insert(b);
    CHECK(lower == std::set<int>{1, 2, 3, 4});
    CHECK(stretches(2, Levels{0, 0}) == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(distance_matrix(Levels{0, 0}).at(1, 2) == 0);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 400; ++trial) {
        int d = 2 + static_cast<int>(rng() % 4);
        Levels x(static_cast<size_t>(d));
        for (auto& v : x) v = static_cast<int>(rng() % 5);
        for (int j = 1; j <= d; ++j) {
            auto st = stretches(j, x);
            CHECK(static_cast<int>(st.size()) == j - 1);
            std::set<std::pair<int, int>> sts(st.begin(), st.end());
            auto before = distance_matrix(x), after = distance_matrix(gamma(j, x));
            for (int b = 1; b <= d; ++b)
                for (int h = b + 1; h <= d; ++h) CHECK(after.at(b, h) - before.at(b, h) == (sts.count({b, h}) ? 1 : 0));
        }
    }
}

TEST_CASE("stability examples") {
    CHECK(is_stable(2, dat("(K(0),K(3))")));
    CHECK(!is_stable(2, dat("(K(0),K(2))")));
    CHECK(!is_stable(2, dat("(J(1),K(0))")));
    for (const auto& a : enumerate_data(3, 4)) CHECK(is_stable(1, a));
}

TEST_CASE("raising adds one to n and updates the D exponent") {
    for (const auto& a : enumerate_data(3, 5))
        for (int j = 1; j <= a.d(); ++j) {
            auto g = gamma(j, a);
            CHECK(g.n() == a.n() + 1);
            CHECK(exponents(g).second == exponents(a).second + (j - 1) - obstructed_stretches(j, a));
            CHECK(exponents(g).first == exponents(a).first);
        }
}

TEST_CASE("stable orbit decomposition") {
    for (int d = 0; d <= 4; ++d) {
        size_t expect = 1u << d;
        for (int j = 2; j <= d; ++j) expect *= static_cast<size_t>(3 * (d - j + 1) + 1);
        CHECK(stable_orbit_decomposition(d).size() == expect);
    }
    CHECK(stable_orbit_decomposition(3).size() == 224);
    CHECK(stable_orbit_decomposition(4).size() == 4480);
    auto one = stable_orbit_decomposition(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].base.to_string() == "(J(1))");
    CHECK(one[1].base.to_string() == "(K(0))");
    for (const auto& o : stable_orbit_decomposition(3))
        for (int j : o.generators) CHECK(is_stable(j, o.base));
}

TEST_CASE("stable orbits partition the data") {
    const int n_max = 12;
    for (int d = 1; d <= 3; ++d) {
        std::map<LeadingTermDatum, int> hits;
        for (const auto& o : stable_orbit_decomposition(d)) {
            std::set<LeadingTermDatum> seen;
            std::vector<LeadingTermDatum> frontier;
            if (o.base.n() <= n_max) frontier.push_back(o.base);
            while (!frontier.empty()) {
                auto a = frontier.back();
                frontier.pop_back();
                if (!seen.insert(a).second) continue;
                for (int j : o.generators) {
                    CHECK(is_stable(j, a));
                    auto g = gamma(j, a);
                    if (g.n() <= n_max) frontier.push_back(g);
                }
            }
            for (const auto& a : seen) ++hits[a];
        }
        auto all = enumerate_data(d, n_max);
        CHECK(hits.size() == all.size());
        for (const auto& a : all) CHECK(hits[a] == 1);
    }
}
