/**
 * @file strata.hpp
 * @brief Leading-term data of the cusp: levels, colors, spiral raising, stretches.
 *
 * A datum is a d-tuple of monomial ideals J(a) = (T^{a+1}) (a >= 1) or
 * K(a) = (T^{a+2}, T^{a+3}) (a >= 0), one per basis vector ("seat"). Its
 * level vector is seat-indexed (level a-1 for J(a), a for K(a)); its color
 * vector is rank-indexed, where the rank order sorts components by
 * (level, seat), i.e. by the leading monomial T^{level+2} u_seat.
 *
 * Seats, ranks and operator indices j are 1-based in the public interface.
 */
#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <tuple>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "groebner.hpp"

namespace cuspquot {

enum class Color { J, K };

inline char color_char(Color c) { return c == Color::J ? 'J' : 'K'; }

using Levels = std::vector<int>;

/// Seats (1-based) listed in rank order: sorted by (level, seat).
inline std::vector<int> rank_order(const Levels& x) {
    std::vector<int> seats(x.size());
    std::iota(seats.begin(), seats.end(), 1);
    std::stable_sort(seats.begin(), seats.end(), [&](int a, int b) {
        return x[static_cast<size_t>(a - 1)] < x[static_cast<size_t>(b - 1)];
    });
    return seats;
}

/**
 * @brief Spiral raising gamma_j on level vectors.
 *
 * The j-1 lowest components stay put. The others, sitting at seats
 * a_1 < ... < a_m, each move to the next of these seats keeping their
 * level; the one at a_m wraps to a_1 with its level raised by one.
 */
inline Levels gamma(int j, const Levels& x) {
    int d = static_cast<int>(x.size());
    if (j < 1 || j > d) throw std::out_of_range("gamma: need 1 <= j <= d");
    auto order = rank_order(x);
    std::vector<int> seats(order.begin() + (j - 1), order.end());
    std::sort(seats.begin(), seats.end());
    Levels y = x;
    size_t m = seats.size();
    for (size_t k = 0; k + 1 < m; ++k) y[static_cast<size_t>(seats[k + 1] - 1)] = x[static_cast<size_t>(seats[k] - 1)];
    y[static_cast<size_t>(seats[0] - 1)] = x[static_cast<size_t>(seats[m - 1] - 1)] + 1;
    return y;
}

/// The preimage under gamma_j, if one exists in N^d.
inline std::optional<Levels> gamma_inverse(int j, const Levels& x) {
    int d = static_cast<int>(x.size());
    if (j < 1 || j > d) throw std::out_of_range("gamma_inverse: need 1 <= j <= d");
    auto order = rank_order(x);
    std::vector<int> seats(order.begin() + (j - 1), order.end());
    std::sort(seats.begin(), seats.end());
    size_t m = seats.size();
    if (x[static_cast<size_t>(seats[0] - 1)] < 1) return std::nullopt;
    Levels y = x;
    for (size_t k = 0; k + 1 < m; ++k) y[static_cast<size_t>(seats[k] - 1)] = x[static_cast<size_t>(seats[k + 1] - 1)];
    y[static_cast<size_t>(seats[m - 1] - 1)] = x[static_cast<size_t>(seats[0] - 1)] - 1;
    if (gamma(j, y) != x) return std::nullopt;
    return y;
}

/// gamma_1^{a_1} ... gamma_d^{a_d} applied to the zero vector.
inline Levels apply_address(const std::vector<int>& a) {
    Levels x(a.size(), 0);
    for (size_t j = a.size(); j-- > 0;)
        for (int k = 0; k < a[j]; ++k) x = gamma(static_cast<int>(j) + 1, x);
    return x;
}

/// The unique address a with apply_address(a) = x, by greedy descent.
inline std::vector<int> orbit_address(const Levels& x) {
    int d = static_cast<int>(x.size());
    std::vector<int> a(x.size(), 0);
    Levels cur = x;
    while (std::any_of(cur.begin(), cur.end(), [](int v) { return v != 0; })) {
        bool stepped = false;
        for (int j = d; j >= 1 && !stepped; --j)
            if (auto y = gamma_inverse(j, cur)) {
                cur = *y;
                ++a[static_cast<size_t>(j - 1)];
                stepped = true;
            }
        if (!stepped) throw std::logic_error("orbit_address: no spiral preimage");
    }
    return a;
}

/// Upper-triangular distances between ranked components, 1-based (b < h).
struct DistanceMatrix {
    int d = 0;
    std::vector<int> m;
    int at(int b, int h) const { return m[static_cast<size_t>((b - 1) * d + (h - 1))]; }
};

/// delta_bh = floor(l_h + s_h/d - l_b - s_b/d) over ranked components.
inline DistanceMatrix distance_matrix(const Levels& x) {
    int d = static_cast<int>(x.size());
    auto order = rank_order(x);
    DistanceMatrix D{d, std::vector<int>(static_cast<size_t>(d * d), 0)};
    for (int b = 1; b <= d; ++b)
        for (int h = b + 1; h <= d; ++h) {
            int sb = order[static_cast<size_t>(b - 1)], sh = order[static_cast<size_t>(h - 1)];
            int num = d * (x[static_cast<size_t>(sh - 1)] - x[static_cast<size_t>(sb - 1)]) + sh - sb;
            D.m[static_cast<size_t>((b - 1) * d + (h - 1))] = num / d;  // num > 0 in rank order
        }
    return D;
}

/**
 * @brief Rank pairs (b, h), b < j <= h, whose distance grows under gamma_j.
 *
 * With s = seat of rank b, s0 = seat of rank h before and s1 after the move,
 * the pair is stretched when s0 < s < s1, or s1 < s0 < s, or s < s1 < s0.
 * A lone moving component wraps onto its own seat (s1 = s0) and then
 * passes every other seat.
 */
inline std::vector<std::pair<int, int>> stretches(int j, const Levels& x) {
    int d = static_cast<int>(x.size());
    if (j < 1 || j > d) throw std::out_of_range("stretches: need 1 <= j <= d");
    auto order = rank_order(x);
    std::vector<int> moving(order.begin() + (j - 1), order.end());
    std::sort(moving.begin(), moving.end());
    auto next_seat = [&](int s) {
        auto it = std::find(moving.begin(), moving.end(), s);
        ++it;
        return it == moving.end() ? moving.front() : *it;
    };
    std::vector<std::pair<int, int>> out;
    for (int b = 1; b < j; ++b)
        for (int h = j; h <= d; ++h) {
            int s = order[static_cast<size_t>(b - 1)];
            int s0 = order[static_cast<size_t>(h - 1)];
            int s1 = next_seat(s0);
            // the move sweeps rightwards from s0 to s1, wrapping past seat d
            bool crossed = s0 < s1 ? (s0 < s && s < s1) : (s > s0 || s < s1);
            if (crossed) out.emplace_back(b, h);
        }
    return out;
}

/**
 * @brief Leading-term datum: seat-indexed levels and rank-indexed colors.
 */
class LeadingTermDatum {
public:
    LeadingTermDatum() = default;
    LeadingTermDatum(Levels levels, std::vector<Color> colors) : levels_(std::move(levels)), colors_(std::move(colors)) {
        if (levels_.size() != colors_.size()) throw std::invalid_argument("datum: size mismatch");
        for (int l : levels_)
            if (l < 0) throw std::invalid_argument("datum: negative level");
    }

    /// From seat-indexed ideals, each (color, a) meaning J(a) or K(a).
    static LeadingTermDatum from_ideals(const std::vector<std::pair<Color, int>>& ideals) {
        Levels lv;
        for (const auto& [c, a] : ideals) {
            if (c == Color::J && a < 1) throw std::invalid_argument("datum: J(a) needs a >= 1");
            if (c == Color::K && a < 0) throw std::invalid_argument("datum: K(a) needs a >= 0");
            lv.push_back(c == Color::J ? a - 1 : a);
        }
        auto order = cuspquot::rank_order(lv);
        std::vector<Color> cols;
        for (int s : order) cols.push_back(ideals[static_cast<size_t>(s - 1)].first);
        return {lv, cols};
    }

    /// Parse the text form "(K(1),J(1),K(0))"; whitespace is ignored.
    static LeadingTermDatum parse(const std::string& text) {
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw std::invalid_argument("datum: expected (...)");
        std::vector<std::pair<Color, int>> ideals;
        size_t i = 1;
        while (i < s.size() - 1) {
            char c = s[i];
            if (c != 'J' && c != 'K') throw std::invalid_argument("datum: expected J or K");
            if (s[i + 1] != '(') throw std::invalid_argument("datum: expected '('");
            size_t close = s.find(')', i + 2);
            if (close == std::string::npos) throw std::invalid_argument("datum: unbalanced parentheses");
            std::string num = s.substr(i + 2, close - i - 2);
            if (num.empty() || !std::all_of(num.begin(), num.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
                throw std::invalid_argument("datum: bad integer");
            ideals.emplace_back(c == 'J' ? Color::J : Color::K, std::stoi(num));
            i = close + 1;
            if (i < s.size() - 1) {
                if (s[i] != ',') throw std::invalid_argument("datum: expected ','");
                ++i;
            }
        }
        return from_ideals(ideals);
    }

    int d() const { return static_cast<int>(levels_.size()); }
    const Levels& levels() const { return levels_; }
    const std::vector<Color>& colors() const { return colors_; }

    std::vector<int> rank_order() const { return cuspquot::rank_order(levels_); }

    /// Rank (1-based) of each seat, indexed by seat - 1.
    std::vector<int> ranks() const {
        auto order = rank_order();
        std::vector<int> r(order.size());
        for (size_t k = 0; k < order.size(); ++k) r[static_cast<size_t>(order[k] - 1)] = static_cast<int>(k) + 1;
        return r;
    }

    Color color_of_seat(int seat) const { return colors_[static_cast<size_t>(ranks()[static_cast<size_t>(seat - 1)] - 1)]; }
    int level_of_seat(int seat) const { return levels_[static_cast<size_t>(seat - 1)]; }

    /// The a in J(a) or K(a) at a seat.
    int ideal_param(int seat) const {
        int l = level_of_seat(seat);
        return color_of_seat(seat) == Color::J ? l + 1 : l;
    }

    bool operator==(const LeadingTermDatum& o) const { return levels_ == o.levels_ && colors_ == o.colors_; }
    bool operator<(const LeadingTermDatum& o) const {
        return std::tie(levels_, colors_) < std::tie(o.levels_, o.colors_);
    }

    std::string to_string() const {
        std::string s = "(";
        for (int i = 1; i <= d(); ++i) {
            if (i > 1) s += ",";
            s += color_char(color_of_seat(i));
            s += "(" + std::to_string(ideal_param(i)) + ")";
        }
        return s + ")";
    }

    /// n = Σ a over the ideals.
    int n() const {
        int s = 0;
        for (int i = 1; i <= d(); ++i) s += ideal_param(i);
        return s;
    }

    Monomial mu0(int seat) const { return {level_of_seat(seat) + 2, seat}; }
    /// Second generator of a K-type component.
    Monomial mu1(int seat) const {
        if (color_of_seat(seat) != Color::K) throw std::invalid_argument("mu1: seat has color J");
        return {level_of_seat(seat) + 3, seat};
    }

    /// Minimal generators of the monomial submodule.
    std::vector<Monomial> corners() const {
        std::vector<Monomial> out;
        for (int i = 1; i <= d(); ++i) {
            out.push_back(mu0(i));
            if (color_of_seat(i) == Color::K) out.push_back(mu1(i));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Standard monomials Δ, sorted in monomial order.
    std::vector<Monomial> standard_set() const {
        std::vector<Monomial> out;
        for (int i = 1; i <= d(); ++i) {
            int l = level_of_seat(i);
            for (int t = 2; t <= l + 1; ++t) out.push_back({t, i});
            if (color_of_seat(i) == Color::J) out.push_back({l + 3, i});
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Standard monomials strictly above a monomial.
    std::vector<Monomial> standard_above(const Monomial& m) const {
        std::vector<Monomial> out;
        for (const auto& s : standard_set())
            if (m < s) out.push_back(s);
        return out;
    }

private:
    Levels levels_;
    std::vector<Color> colors_;
};

/// Spiral raising on data: levels move, the rank-indexed colors stay.
inline LeadingTermDatum gamma(int j, const LeadingTermDatum& a) { return {gamma(j, a.levels()), a.colors()}; }

/// Stability of (j, alpha): distances across the j-cut are large enough.
inline bool is_stable(int j, const LeadingTermDatum& a) {
    int d = a.d();
    if (j < 1 || j > d) throw std::out_of_range("is_stable: need 1 <= j <= d");
    auto D = distance_matrix(a.levels());
    const auto& c = a.colors();
    for (int b = 1; b < j; ++b)
        for (int h = j; h <= d; ++h) {
            Color cb = c[static_cast<size_t>(b - 1)], ch = c[static_cast<size_t>(h - 1)];
            if (cb == Color::J && D.at(b, h) < 1) return false;
            if (cb == Color::K && ch == Color::K && D.at(b, h) < 3) return false;
        }
    return true;
}

/// Stretches of gamma_j with distance 0 and lower color J.
inline int obstructed_stretches(int j, const LeadingTermDatum& a) {
    auto D = distance_matrix(a.levels());
    int s = 0;
    for (const auto& [b, h] : stretches(j, a.levels()))
        if (D.at(b, h) == 0 && a.colors()[static_cast<size_t>(b - 1)] == Color::J) ++s;
    return s;
}

/// (b(alpha), delta(alpha)): the exponents of the B and D factors.
inline std::pair<int, int> exponents(const LeadingTermDatum& a) {
    const auto& c = a.colors();
    int b = 0;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t k = i + 1; k < c.size(); ++k)
            if (c[i] == Color::K && c[k] == Color::J) ++b;
    auto std_set = a.standard_set();
    int delta = 0;
    for (int i = 1; i <= a.d(); ++i) {
        Monomial m = a.mu0(i);
        delta += static_cast<int>(std::count_if(std_set.begin(), std_set.end(), [&](const Monomial& s) { return m < s; }));
    }
    return {b, delta};
}

/// Restriction to the K-colored components, seats renumbered in order.
inline LeadingTermDatum restrict_to_K(const LeadingTermDatum& a) {
    std::vector<std::pair<Color, int>> ideals;
    for (int i = 1; i <= a.d(); ++i)
        if (a.color_of_seat(i) == Color::K) ideals.emplace_back(Color::K, a.ideal_param(i));
    return LeadingTermDatum::from_ideals(ideals);
}

/// The zero level vector with the given rank-indexed colors.
inline LeadingTermDatum zero_datum(const std::vector<Color>& colors) {
    return {Levels(colors.size(), 0), colors};
}

/// One orbit of the stable decomposition: base datum and generator indices j.
struct StableOrbit {
    LeadingTermDatum base;
    std::vector<int> generators;
    std::vector<int> box;  // (0, b_2, ..., b_d)
};

/// All 2^d color vectors in lexicographic order J < K.
inline std::vector<std::vector<Color>> all_color_vectors(int d) {
    std::vector<std::vector<Color>> out;
    for (int mask = 0; mask < (1 << d); ++mask) {
        std::vector<Color> c(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] = (mask >> (d - 1 - i)) & 1 ? Color::K : Color::J;
        out.push_back(c);
    }
    return out;
}

/// Box B = {(0, b_2..b_d) : 0 <= b_j <= 3(d-j+1)} in lexicographic order.
inline std::vector<std::vector<int>> stable_box(int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> b(static_cast<size_t>(d), 0);
    if (d == 0) return {b};
    while (true) {
        out.push_back(b);
        int j = d;
        for (; j >= 2; --j) {
            if (b[static_cast<size_t>(j - 1)] < 3 * (d - j + 1)) {
                ++b[static_cast<size_t>(j - 1)];
                break;
            }
            b[static_cast<size_t>(j - 1)] = 0;
        }
        if (j < 2) return out;
    }
}

/// Orbits for a fixed color vector.
inline std::vector<StableOrbit> stable_orbits_for_colors(const std::vector<Color>& colors) {
    int d = static_cast<int>(colors.size());
    std::vector<StableOrbit> out;
    for (const auto& b : stable_box(d)) {
        std::vector<int> gens;
        if (d >= 1) gens.push_back(1);
        for (int j = 2; j <= d; ++j)
            if (b[static_cast<size_t>(j - 1)] == 3 * (d - j + 1)) gens.push_back(j);
        out.push_back({LeadingTermDatum(apply_address(b), colors), gens, b});
    }
    return out;
}

/// The canonical stable orbit decomposition of all data of rank d.
inline std::vector<StableOrbit> stable_orbit_decomposition(int d) {
    if (d < 0) throw std::invalid_argument("stable_orbit_decomposition: d < 0");
    std::vector<StableOrbit> out;
    for (const auto& c : all_color_vectors(d)) {
        auto part = stable_orbits_for_colors(c);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

/// All data of rank d with n(alpha) <= n_max.
inline std::vector<LeadingTermDatum> enumerate_data(int d, int n_max) {
    std::vector<LeadingTermDatum> out;
    Levels x(static_cast<size_t>(d), 0);
    auto colors = all_color_vectors(d);
    std::function<void(int, int)> rec = [&](int i, int budget) {
        if (i == d) {
            for (const auto& c : colors) {
                LeadingTermDatum a(x, c);
                if (a.n() <= n_max) out.push_back(a);
            }
            return;
        }
        for (int l = 0; l <= budget; ++l) {
            x[static_cast<size_t>(i)] = l;
            rec(i + 1, budget - l);
        }
    };
    rec(0, n_max);
    return out;
}

}  // namespace cuspquot
