/**
 * @file varieties.hpp
 * @brief Stratum varieties V(alpha), the staircase variety V_d and its motive.
 *
 * V(alpha), for a pure-K datum re-indexed by rank, is the set of strictly
 * upper triangular pairs (X, Y) with X^2 = Y^3 and XY = YX, where X_bh must
 * vanish unless delta_bh >= 3 and Y_bh must vanish unless delta_bh >= 2.
 * V_d drops the vanishing conditions.
 */
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gf.hpp"
#include "qalgebra.hpp"
#include "strata.hpp"

namespace cuspquot {

/// Default cap on the number of candidates any enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;

/// Distance class of a pair: 1 for "at most 1", 2, or 3 for "at least 3".
inline int distance_class(int delta) { return delta <= 1 ? 1 : (delta == 2 ? 2 : 3); }

/**
 * @brief Zero pattern of V(alpha) for a pure-K datum.
 *
 * Entries are rank-indexed and row-major; classes list the truncated
 * distance of each pair in the order (1,2), (1,3), ..., (2,3), ...
 */
struct VAlphaSpec {
    int d = 0;
    std::vector<bool> x_allowed, y_allowed;
    std::vector<int> classes;

    /// Key used by the symbolic tables: (d12) or (d12, d23, d13).
    std::vector<int> table_key() const {
        if (d == 2) return {classes[0]};
        if (d == 3) return {classes[0], classes[2], classes[1]};
        return classes;
    }
    bool fully_stable() const {
        for (int c : classes)
            if (c != 3) return false;
        return true;
    }
    bool operator<(const VAlphaSpec& o) const {
        return std::tie(d, x_allowed, y_allowed) < std::tie(o.d, o.x_allowed, o.y_allowed);
    }
};

/// The unrestricted pattern of V_d: every strictly upper entry free.
inline VAlphaSpec staircase_spec(int d) {
    VAlphaSpec s{d, std::vector<bool>(static_cast<size_t>(d * d), false), std::vector<bool>(static_cast<size_t>(d * d), false), {}};
    for (int b = 0; b < d; ++b)
        for (int h = b + 1; h < d; ++h) {
            s.x_allowed[static_cast<size_t>(b * d + h)] = true;
            s.y_allowed[static_cast<size_t>(b * d + h)] = true;
            s.classes.push_back(3);
        }
    return s;
}

/// Pattern of V(alpha) for a pure-K datum.
inline VAlphaSpec v_alpha_spec(const LeadingTermDatum& a) {
    for (Color c : a.colors())
        if (c != Color::K) throw std::invalid_argument("v_alpha_spec: datum is not pure K");
    int d = a.d();
    auto D = distance_matrix(a.levels());
    VAlphaSpec s{d, std::vector<bool>(static_cast<size_t>(d * d), false), std::vector<bool>(static_cast<size_t>(d * d), false), {}};
    for (int b = 1; b <= d; ++b)
        for (int h = b + 1; h <= d; ++h) {
            int delta = D.at(b, h);
            s.x_allowed[static_cast<size_t>((b - 1) * d + h - 1)] = delta >= 3;
            s.y_allowed[static_cast<size_t>((b - 1) * d + h - 1)] = delta >= 2;
            s.classes.push_back(distance_class(delta));
        }
    return s;
}

/**
 * @brief Visit every F_p point (X, Y) of the pattern variety.
 *
 * Enumerates Y over its free entries, solves the linear condition XY = YX
 * for X inside its pattern, and filters X^2 = Y^3.
 * @throws std::length_error if an enumeration would exceed the budget.
 */
inline void for_each_pattern_point(const VAlphaSpec& s, Fe p, std::uint64_t budget,
                                   const std::function<void(const GFMatrix&, const GFMatrix&)>& visit) {
    const int d = s.d;
    std::vector<int> ypos, xpos;
    for (int i = 0; i < d * d; ++i) {
        if (s.y_allowed[static_cast<size_t>(i)]) ypos.push_back(i);
        if (s.x_allowed[static_cast<size_t>(i)]) xpos.push_back(i);
    }
    long double ycount = 1;
    for (size_t i = 0; i < ypos.size(); ++i) ycount *= p;
    if (ycount > static_cast<long double>(budget)) throw std::length_error("pattern variety: Y space exceeds budget");

    std::vector<Fe> ydigits(ypos.size(), 0);
    while (true) {
        GFMatrix Y(d, d, p);
        for (size_t k = 0; k < ypos.size(); ++k) Y.at(ypos[k] / d, ypos[k] % d) = ydigits[k];
        GFMatrix Y3 = Y * Y * Y;
        // columns: X = E_pos, constraint E Y - Y E = 0
        GFMatrix L(d * d, static_cast<int>(xpos.size()), p);
        for (size_t k = 0; k < xpos.size(); ++k) {
            GFMatrix E(d, d, p);
            E.at(xpos[k] / d, xpos[k] % d) = 1;
            GFMatrix C = E * Y - Y * E;
            for (int i = 0; i < d * d; ++i) L.at(i, static_cast<int>(k)) = C.data()[static_cast<size_t>(i)];
        }
        auto basis = xpos.empty() ? std::vector<std::vector<Fe>>{} : nullspace(L);
        for_each_in_span(basis, xpos.size(), p, budget, [&](const std::vector<Fe>& v) {
            GFMatrix X(d, d, p);
            for (size_t k = 0; k < xpos.size(); ++k) X.at(xpos[k] / d, xpos[k] % d) = v[k];
            if (X * X == Y3) visit(X, Y);
        });
        size_t k = 0;
        for (; k < ydigits.size(); ++k) {
            if (++ydigits[k] < p) break;
            ydigits[k] = 0;
        }
        if (k == ydigits.size()) break;
    }
}

/**
 * @brief Number of F_p points of the pattern variety.
 * @throws std::length_error if an enumeration would exceed the budget.
 */
inline BigInt count_pattern(const VAlphaSpec& s, Fe p, std::uint64_t budget = kDefaultBudget) {
    if (s.d <= 1) return 1;
    std::uint64_t hits = 0;
    for_each_pattern_point(s, p, budget, [&](const GFMatrix&, const GFMatrix&) { ++hits; });
    return hits;
}

/// |V(alpha)(F_p)| for a pure-K datum.
inline BigInt count_v_alpha(const LeadingTermDatum& a, Fe p, std::uint64_t budget = kDefaultBudget) {
    return count_pattern(v_alpha_spec(a), p, budget);
}

/// |V_d(F_p)| by exhaustive search.
inline BigInt brute_v_d(int d, Fe p, std::uint64_t budget = kDefaultBudget) {
    return count_pattern(staircase_spec(d), p, budget);
}

// ---------------------------------------------------------------------------
// Symbolic classes
// ---------------------------------------------------------------------------

/// Built-in classes [V(alpha)] of pure-K strata for d = 2, 3, keyed by distance classes.
inline const std::map<std::vector<int>, LaurentPoly>& pure_k_table() {
    static const std::map<std::vector<int>, LaurentPoly> table = [] {
        auto q = [](int e) { return LaurentPoly::q(e); };
        std::map<std::vector<int>, LaurentPoly> t;
        t[{1}] = 1;
        t[{2}] = q(1);
        t[{3}] = q(2);
        t[{1, 1, 1}] = 1;
        t[{1, 1, 2}] = q(1);
        t[{1, 1, 3}] = q(2);
        t[{1, 2, 2}] = q(2);
        t[{1, 2, 3}] = q(3);
        t[{1, 3, 3}] = q(4);
        t[{2, 1, 2}] = q(2);
        t[{2, 1, 3}] = q(3);
        t[{2, 2, 3}] = q(4);
        t[{2, 3, 3}] = 2 * q(4) - q(3);
        t[{3, 1, 3}] = q(4);
        t[{3, 2, 3}] = 2 * q(4) - q(3);
        t[{3, 3, 3}] = 3 * q(4) - 2 * q(3);
        return t;
    }();
    return table;
}

/**
 * @brief [V(alpha)] for a pure-K datum with d <= 3, from the class tables.
 * @throws std::out_of_range for d > 3 or a class missing from the table.
 */
inline LaurentPoly symbolic_v_alpha(const LeadingTermDatum& a) {
    if (a.d() <= 1) {
        v_alpha_spec(a);  // validates color
        return 1;
    }
    if (a.d() > 3) throw std::out_of_range("symbolic_v_alpha: only d <= 3 is tabulated");
    auto key = v_alpha_spec(a).table_key();
    const auto& t = pure_k_table();
    auto it = t.find(key);
    if (it == t.end()) throw std::out_of_range("symbolic_v_alpha: distance class not in table");
    return it->second;
}

// ---------------------------------------------------------------------------
// Motive recursion
// ---------------------------------------------------------------------------

/**
 * @brief Classes [V_{a,b}] of the strata of V_d by (dim ker A, dim im A).
 *
 * [V_{0,0}] = 1, [V_{a,b}] = 0 off the cone a >= b >= 0, a = b mod 2, and
 * [V_{a,b}] = q^b [V_{a-2,b}] + (q^{(a+b-2)/2} - q^{b-1}) [V_{a-1,b-1}]
 *           + (q^a - q^{(a+b-2)/2}) [V_{a,b-2}].
 */
class MotiveTable {
public:
    LaurentPoly get(int a, int b) {
        std::lock_guard<std::mutex> lock(mu_);
        return get_locked(a, b);
    }

    /// [V_d] = Σ_b [V_{2d-b, b}]
    LaurentPoly vd(int d) {
        if (d < 0) throw std::invalid_argument("staircase_motive: d < 0");
        LaurentPoly s;
        for (int b = 0; b <= d; ++b) s += get(2 * d - b, b);
        return s;
    }

    /// Rows "a,b,polynomial" for all nonzero entries with a + b = 2d, d <= d_max.
    std::string csv_ab(int d_max) {
        std::ostringstream os;
        os << "a,b,polynomial\n";
        for (int d = 0; d <= d_max; ++d)
            for (int b = 0; b <= d; ++b) {
                LaurentPoly v = get(2 * d - b, b);
                if (!v.is_zero()) os << 2 * d - b << "," << b << "," << v.to_string() << "\n";
            }
        return os.str();
    }

    /// Rows "d,polynomial" for d <= d_max.
    std::string csv_d(int d_max) {
        std::ostringstream os;
        os << "d,polynomial\n";
        for (int d = 0; d <= d_max; ++d) os << d << "," << vd(d).to_string() << "\n";
        return os.str();
    }

private:
    std::map<std::pair<int, int>, LaurentPoly> memo_;
    std::mutex mu_;

    LaurentPoly get_locked(int a, int b) {
        if (b < 0 || a < b || (a - b) % 2 != 0) return {};
        if (a == 0 && b == 0) return 1;
        auto key = std::make_pair(a, b);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int mid = (a + b - 2) / 2;
        LaurentPoly v = LaurentPoly::q(b) * get_locked(a - 2, b);
        if (b >= 1) v += (LaurentPoly::q(mid) - LaurentPoly::q(b - 1)) * get_locked(a - 1, b - 1);
        v += (LaurentPoly::q(a) - LaurentPoly::q(mid)) * get_locked(a, b - 2);
        memo_.emplace(key, v);
        return v;
    }
};

inline MotiveTable& motive_table() {
    static MotiveTable t;
    return t;
}

/// [V_d] as a polynomial in q.
inline LaurentPoly staircase_motive(int d) { return motive_table().vd(d); }

// ---------------------------------------------------------------------------
// Homological profile
// ---------------------------------------------------------------------------

/// Dimensions attached to the operator A_M on M ⊕ M.
struct AbProfile {
    int a = 0, b = 0;        // dim ker A_M, dim im A_M
    int w0 = 0, w1 = 0, w2 = 0;
    int ker_a_prime = 0, im_a_prime = 0;
    bool t_exact = false;    // ker T = im T on ker A_M / im A'_M
};

/// Subspaces W^0 ⊆ W^1 ⊆ W^2 of M ⊕ M, as bases.
struct WFiltration {
    std::vector<std::vector<Fe>> w0, w1, w2;
};

/// True iff (X, Y) is a point of V_d.
inline bool in_staircase(const GFMatrix& X, const GFMatrix& Y) {
    int d = X.rows();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= i; ++j)
            if (X.at(i, j) || Y.at(i, j)) return false;
    return X * X == Y * Y * Y && X * Y == Y * X;
}

namespace detail {
struct HomologicalOps {
    GFMatrix A, Ap, T;
};

inline HomologicalOps homological_ops(const GFMatrix& X, const GFMatrix& Y) {
    int d = X.rows();
    Fe p = X.prime();
    GFMatrix Y2 = Y * Y;
    GFMatrix I = GFMatrix::identity(d, p), Z(d, d, p);
    return {GFMatrix::block2(X, -Y2, -Y, X), GFMatrix::block2(X, Y2, Y, X), GFMatrix::block2(Z, Y, I, Z)};
}

inline int span_dim(const std::vector<std::vector<Fe>>& vs, int n, Fe p) {
    if (vs.empty()) return 0;
    return rank(GFMatrix::from_columns(vs, n, p));
}
}  // namespace detail

/**
 * @brief W^0 = im A'_M, W^1 = {v in ker A_M : T v in im A'_M}, W^2 = ker A_M.
 */
inline WFiltration w_filtration(const GFMatrix& X, const GFMatrix& Y) {
    int n = 2 * X.rows();
    Fe p = X.prime();
    auto ops = detail::homological_ops(X, Y);
    WFiltration w;
    w.w2 = nullspace(ops.A);
    w.w0 = column_space(ops.Ap);
    if (w.w2.empty()) return w;
    // solve T K c = B e with K = basis of ker A, B = basis of im A'
    GFMatrix K = GFMatrix::from_columns(w.w2, n, p);
    GFMatrix TK = ops.T * K;
    GFMatrix sys = w.w0.empty() ? TK : GFMatrix::hcat(TK, GFMatrix::from_columns(w.w0, n, p));
    PrimeField f(p);
    std::vector<std::vector<Fe>> gens;
    for (const auto& sol : nullspace(sys)) {
        std::vector<Fe> c(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(w.w2.size()));
        gens.push_back(K.apply(c));
    }
    // drop dependent vectors
    GFMatrix G = gens.empty() ? GFMatrix(n, 0, p) : GFMatrix::from_columns(gens, n, p);
    w.w1 = gens.empty() ? std::vector<std::vector<Fe>>{} : column_space(G);
    return w;
}

/**
 * @brief Kernel/image dimensions and the W-filtration for a point of V_d.
 * @throws std::invalid_argument if (X, Y) is not on V_d.
 */
inline AbProfile ab_profile(const GFMatrix& X, const GFMatrix& Y) {
    if (!in_staircase(X, Y)) throw std::invalid_argument("ab_profile: point is not on V_d");
    int n = 2 * X.rows();
    Fe p = X.prime();
    auto ops = detail::homological_ops(X, Y);
    AbProfile r;
    r.b = rank(ops.A);
    r.a = n - r.b;
    r.im_a_prime = rank(ops.Ap);
    r.ker_a_prime = n - r.im_a_prime;
    auto w = w_filtration(X, Y);
    r.w0 = static_cast<int>(w.w0.size());
    r.w1 = static_cast<int>(w.w1.size());
    r.w2 = static_cast<int>(w.w2.size());
    // on H^0 = W^2 / W^0: image of T is (T W^2 + W^0) / W^0, kernel is W^1 / W^0
    std::vector<std::vector<Fe>> img = w.w0;
    for (const auto& v : w.w2) img.push_back(ops.T.apply(v));
    int im_dim = detail::span_dim(img, n, p);
    std::vector<std::vector<Fe>> both = img;
    both.insert(both.end(), w.w1.begin(), w.w1.end());
    bool contained = detail::span_dim(both, n, p) == r.w1;
    r.t_exact = contained && im_dim == r.w1;
    return r;
}

/// Append a column: X' = [[X, z], [0, 0]], Y' = [[Y, w], [0, 0]] for u = (z, w).
inline std::pair<GFMatrix, GFMatrix> extend_point(const GFMatrix& X, const GFMatrix& Y, const std::vector<Fe>& u) {
    int d = X.rows();
    Fe p = X.prime();
    GFMatrix X2(d + 1, d + 1, p), Y2(d + 1, d + 1, p);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            X2.at(i, j) = X.at(i, j);
            Y2.at(i, j) = Y.at(i, j);
        }
        X2.at(i, d) = u[static_cast<size_t>(i)];
        Y2.at(i, d) = u[static_cast<size_t>(d + i)];
    }
    return {X2, Y2};
}

}  // namespace cuspquot
