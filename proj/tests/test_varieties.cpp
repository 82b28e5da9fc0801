/**
 * @file test_varieties.cpp
 * @brief Staircase and pattern varieties: point counts, class tables, the (a, b) strata.
 */
#include <map>

#include "doctest.h"
#include "naive.hpp"

#include "cuspquot/varieties.hpp"

using namespace cuspquot;

namespace {

LaurentPoly qp(std::initializer_list<std::pair<int, long long>> terms) {
    LaurentPoly r;
    for (const auto& [e, c] : terms) r += LaurentPoly::monomial(c, e);
    return r;
}

}  // namespace

TEST_CASE("a pure-K pattern variety by hand") {
    auto a = LeadingTermDatum::parse("(K(0),K(2),K(9))");
    auto s = v_alpha_spec(a);
    // X_12 is forced to vanish, everything else strictly upper is free
    CHECK(!s.x_allowed[1]);
    CHECK(s.y_allowed[1]);
    CHECK(s.x_allowed[2]);
    CHECK(s.x_allowed[5]);
    CHECK(symbolic_v_alpha(a) == qp({{4, 2}, {3, -1}}));
    CHECK(count_v_alpha(a, 2) == 24);
    CHECK(count_v_alpha(a, 3) == 135);
    CHECK_THROWS_AS(v_alpha_spec(LeadingTermDatum::parse("(K(0),J(2))")), std::invalid_argument);
}

TEST_CASE("staircase counts agree with naive enumeration and the motive") {
    for (int d = 0; d <= 4; ++d) {
        BigInt naive_count = d <= 1 ? 1 : naive::count_staircase_f2(d);
        CHECK(brute_v_d(d, 2) == naive_count);
        CHECK(staircase_motive(d).evaluate_int(2) == naive_count);
    }
    CHECK(brute_v_d(2, 3) == 9);
    CHECK(staircase_motive(2) == qp({{2, 1}}));
    CHECK(staircase_motive(3) == qp({{4, 3}, {3, -2}}));
    CHECK(staircase_motive(5).to_string() == "10*q^12 - 5*q^11 - 9*q^10 + 5*q^9");
    for (int d = 0; d <= 20; ++d) CHECK(staircase_motive(d).sum_of_coeffs() == 1);
}

TEST_CASE("pure-K class table matches point counts") {
    std::map<std::vector<int>, int> seen;
    for (int d = 2; d <= 3; ++d) {
        std::vector<Color> ks(static_cast<size_t>(d), Color::K);
        Levels x(static_cast<size_t>(d), 0);
        int total = 1;
        for (int i = 0; i < d; ++i) total *= 7;
        for (int code = 0; code < total; ++code) {
            int c = code;
            for (auto& l : x) {
                l = c % 7;
                c /= 7;
            }
            LeadingTermDatum a(x, ks);
            auto key = v_alpha_spec(a).table_key();
            LaurentPoly cls = symbolic_v_alpha(a);
            // the class depends on the distance classes only; check every datum at p = 2
            CHECK(count_v_alpha(a, 2) == cls.evaluate_int(2));
            if (seen[key]++ == 0) {
                std::vector<Fe> primes = d == 2 ? std::vector<Fe>{3, 5, 7, 11} : std::vector<Fe>{3, 5};
                for (Fe p : primes) CHECK(count_v_alpha(a, p) == cls.evaluate_int(p));
            }
        }
    }
    CHECK(seen.size() == pure_k_table().size());
}

TEST_CASE("motive table entries") {
    auto& t = motive_table();
    CHECK(t.get(0, 0) == LaurentPoly(1));
    CHECK(t.get(2, 0) == LaurentPoly(1));
    CHECK(t.get(1, 1).is_zero());
    CHECK(t.get(1, 0).is_zero());
    CHECK(t.get(0, 2).is_zero());
    CHECK(t.csv_ab(1) == "a,b,polynomial\n0,0,1\n2,0,1\n");
    CHECK(t.csv_d(2) == "d,polynomial\n0,1\n1,1\n2,q^2\n");
    CHECK_THROWS_AS(t.vd(-1), std::invalid_argument);
}

TEST_CASE("(a, b) strata of V_d match the recursion") {
    for (Fe p : {2u, 3u})
        for (int d = 1; d <= (p == 2 ? 4 : 3); ++d) {
            std::map<std::pair<int, int>, BigInt> by_ab;
            for_each_pattern_point(staircase_spec(d), p, kDefaultBudget, [&](const GFMatrix& X, const GFMatrix& Y) {
                auto r = ab_profile(X, Y);
                by_ab[{r.a, r.b}] += 1;
            });
            for (int b = 0; b <= d; ++b) {
                BigInt expect = motive_table().get(2 * d - b, b).evaluate_int(p);
                CHECK(by_ab[{2 * d - b, b}] == expect);
            }
        }
}

TEST_CASE("homological profile of the zero point") {
    GFMatrix Z(1, 1, 2);
    auto r = ab_profile(Z, Z);
    CHECK(r.a == 2);
    CHECK(r.b == 0);
    CHECK(r.w0 == 0);
    CHECK(r.w1 == 1);
    CHECK(r.w2 == 2);
    CHECK(r.t_exact);
    auto [X1, Y1] = extend_point(Z, Z, {1, 0});
    CHECK(in_staircase(X1, Y1));
    auto e = ab_profile(X1, Y1);
    CHECK(e.a + e.b == 4);

    GFMatrix bad(2, 2, 2);
    bad.at(1, 0) = 1;
    CHECK_THROWS_AS(ab_profile(bad, GFMatrix(2, 2, 2)), std::invalid_argument);
    GFMatrix X(3, 3, 2), Y(3, 3, 2);
    X.at(0, 1) = 1;
    X.at(1, 2) = 1;  // X^2 != 0 = Y^3
    CHECK(!in_staircase(X, Y));
    CHECK_THROWS_AS(ab_profile(X, Y), std::invalid_argument);
}

TEST_CASE("budget guard") {
    CHECK_THROWS_AS(count_pattern(staircase_spec(5), 3, 1000), std::length_error);
}
