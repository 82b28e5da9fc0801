/**
 * @file series.hpp
 * @brief Generating series H_d, Q_d, zhat and the consistency checks on them.
 *
 * H_d(t) = Σ_alpha Cont(alpha), Cont(alpha) = A(alpha) q^{b(alpha) + delta(alpha)} t^{n(alpha)},
 * summed orbit by orbit over the stable decomposition: an orbit with base
 * beta and generators j contributes Cont(beta) / Π (1 - q^{j-1} t). Every
 * series is kept over the common denominator (t;q)_d.
 */
#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qalgebra.hpp"
#include "strata.hpp"
#include "varieties.hpp"

namespace cuspquot {

/// Symbolic in q, or evaluated at q = p.
struct Mode {
    Fe prime = 0;

    static Mode symbolic() { return {}; }
    static Mode at_prime(Fe p) {
        PrimeField check(p);
        return {p};
    }
    bool is_symbolic() const { return prime == 0; }
    std::string name() const { return is_symbolic() ? "symbolic" : "prime=" + std::to_string(prime); }
    bool operator<(const Mode& o) const { return prime < o.prime; }

    /// q^e, or p^e for e >= 0 in prime mode.
    LaurentPoly q(int e) const {
        if (is_symbolic()) return LaurentPoly::q(e);
        if (e < 0) throw std::domain_error("Mode::q: negative power at a prime");
        return LaurentPoly(ipow(BigInt(prime), static_cast<unsigned>(e)));
    }
    /// Map a symbolic polynomial into this mode.
    LaurentPoly eval(const LaurentPoly& f) const {
        if (is_symbolic()) return f;
        return LaurentPoly(f.evaluate_int(BigInt(prime)));
    }
    /// f(t) -> f(q^a t)
    TPoly scale_t(const TPoly& f, int a) const {
        std::vector<LaurentPoly> v;
        for (size_t i = 0; i < f.coeffs().size(); ++i) v.push_back(f.coeffs()[i] * q(a * static_cast<int>(i)));
        return TPoly(std::move(v));
    }
    /// (t;q)_d
    TPoly t_poch(int d) const {
        TPoly r = 1;
        for (int i = 0; i < d; ++i) r *= TPoly(std::vector<LaurentPoly>{1, -q(i)});
        return r;
    }
};

/**
 * @brief A(alpha) = [V(alpha|_K)].
 *
 * Symbolic: class tables for |K| <= 3, the staircase motive when all K
 * distances are at least 3, otherwise unknown. At a prime: direct count,
 * or the staircase motive for fully stable data.
 */
inline LaurentPoly a_factor(const LeadingTermDatum& alpha, Mode mode) {
    LeadingTermDatum k = restrict_to_K(alpha);
    if (k.d() <= 1) return 1;
    VAlphaSpec spec = v_alpha_spec(k);
    if (spec.fully_stable()) return mode.eval(staircase_motive(k.d()));
    if (mode.is_symbolic()) {
        if (k.d() <= 3) return symbolic_v_alpha(k);
        throw std::out_of_range("a_factor: no symbolic class for an unstable pure-K datum of rank > 3");
    }
    static std::map<std::pair<VAlphaSpec, Fe>, BigInt> memo;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({spec, mode.prime});
        if (it != memo.end()) return it->second;
    }
    BigInt c = count_pattern(spec, mode.prime);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_pair(spec, mode.prime), c);
    return c;
}

/// A(alpha) q^{b + delta}, the coefficient of Cont(alpha).
inline LaurentPoly content_coeff(const LeadingTermDatum& alpha, Mode mode) {
    auto [b, delta] = exponents(alpha);
    return a_factor(alpha, mode) * mode.q(b + delta);
}

/// Cont(alpha) as a monomial in t.
inline TPoly content(const LeadingTermDatum& alpha, Mode mode) {
    return TPoly::monomial(content_coeff(alpha, mode), alpha.n());
}

/// Σ over the given orbits of Cont(base) / Π_{j in gens}(1 - q^{j-1} t), over (t;q)_d.
inline TSeries sum_orbits(int d, const std::vector<StableOrbit>& orbits, Mode mode) {
    TPoly num;
    for (const auto& o : orbits) {
        TPoly term = content(o.base, mode);
        for (int j = 1; j <= d; ++j)
            if (std::find(o.generators.begin(), o.generators.end(), j) == o.generators.end())
                term *= TPoly(std::vector<LaurentPoly>{1, -mode.q(j - 1)});
        num += term;
    }
    return {num, mode.t_poch(d)};
}

/// Σ_{alpha with color vector c} Cont(alpha), over (t;q)_d.
inline TSeries color_sum(const std::vector<Color>& colors, Mode mode) {
    return sum_orbits(static_cast<int>(colors.size()), stable_orbits_for_colors(colors), mode);
}

/**
 * @brief H_d(t) over (t;q)_d.
 * @throws std::out_of_range in symbolic mode when some A(alpha) is unknown (d > 3).
 */
inline TSeries hilb_series(int d, Mode mode = Mode::symbolic()) {
    if (d < 0) throw std::invalid_argument("hilb_series: d < 0");
    static std::map<std::pair<int, Mode>, TSeries> memo;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({d, mode});
        if (it != memo.end()) return it->second;
    }
    if (mode.is_symbolic() && d > 3) throw std::out_of_range("hilb_series: symbolic mode needs d <= 3");
    TSeries h = sum_orbits(d, stable_orbit_decomposition(d), mode);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_pair(d, mode), h);
    return h;
}

/// NH_d = (t;q)_d H_d
inline TPoly nh(int d, Mode mode = Mode::symbolic()) { return hilb_series(d, mode).num; }

/// Q_d from H_0..H_d: Q_d(t) = Σ_r [d r]_q t^r H_r(q^{d-r} t), over (t;q)_d.
inline TSeries quot_from_hilb(int d, const std::vector<TSeries>& H, Mode mode) {
    TPoly num;
    for (int r = 0; r <= d; ++r) {
        const TSeries& h = H[static_cast<size_t>(r)];
        if (h.den != mode.t_poch(r)) throw std::invalid_argument("quot_from_hilb: H_r must be over (t;q)_r");
        // H_r(q^{d-r} t) has denominator Π_{i=d-r}^{d-1}(1 - q^i t); complete to (t;q)_d
        TPoly term = mode.scale_t(h.num, d - r).shifted(r) * mode.t_poch(d - r);
        num += term * TPoly(mode.eval(q_binomial(d, r)));
    }
    return {num, mode.t_poch(d)};
}

/// Q_d(t) over (t;q)_d.
inline TSeries quot_series(int d, Mode mode = Mode::symbolic()) {
    std::vector<TSeries> H;
    for (int r = 0; r <= d; ++r) H.push_back(hilb_series(r, mode));
    return quot_from_hilb(d, H, mode);
}

/// NQ_d = (t;q)_d Q_d
inline TPoly nq(int d, Mode mode = Mode::symbolic()) { return quot_series(d, mode).num; }

/**
 * @brief H_d recovered from Q_0..Q_d by q-Pascal inversion:
 * H_d(t) = t^{-d} Σ_r (-1)^{d-r} q^{-C(d-r,2)} [d r]_{q^{-1}} Q_r(q^{d-r} t).
 */
inline TSeries hilb_from_quot(int d, const std::vector<TSeries>& Q) {
    TPoly num;
    for (int r = 0; r <= d; ++r) {
        const TSeries& qr = Q[static_cast<size_t>(r)];
        if (qr.den != t_pochhammer(r)) throw std::invalid_argument("hilb_from_quot: Q_r must be over (t;q)_r");
        LaurentPoly c = q_binomial_inv(d, r).shifted(-choose2(d - r));
        if ((d - r) % 2) c = -c;
        num += qr.num.substitute(d - r) * t_pochhammer(d - r) * TPoly(c);
    }
    return {num.shifted(-d), t_pochhammer(d)};
}

/// hilb_from_quot using the engine's own Q_0..Q_d.
inline TSeries hilb_from_quot(int d) {
    std::vector<TSeries> Q;
    for (int r = 0; r <= d; ++r) Q.push_back(quot_series(r));
    return hilb_from_quot(d, Q);
}

/**
 * @brief [t^n] zhat for n = 0..n_max:
 * Σ_{d<=n} q^{-d^2-d(n-d)} [t^{n-d}]H_d / (q^{-1};q^{-1})_d.
 */
inline std::vector<RationalQ> zhat_truncation(int n_max, Mode mode = Mode::symbolic()) {
    std::vector<std::vector<LaurentPoly>> h;
    for (int d = 0; d <= n_max; ++d) h.push_back(hilb_series(d, mode).expand(n_max - d));
    std::vector<RationalQ> out;
    for (int n = 0; n <= n_max; ++n) {
        RationalQ acc(LaurentPoly(0));
        for (int d = 0; d <= n; ++d) {
            const LaurentPoly& c = h[static_cast<size_t>(d)][static_cast<size_t>(n - d)];
            int e = d * d + d * (n - d);
            if (mode.is_symbolic()) {
                acc = acc + RationalQ(c.shifted(-e), q_pochhammer_inv(d));
            } else {
                // 1/(q^{-1};q^{-1})_d = q^{C(d+1,2)} / Π (q^i - 1)
                LaurentPoly den = mode.q(e);
                for (int i = 1; i <= d; ++i) den *= mode.q(i) - LaurentPoly(1);
                acc = acc + RationalQ(c * mode.q(choose2(d + 1)), den);
            }
        }
        out.push_back(acc);
    }
    return out;
}

/// [t^n] of the conjectured closed form 1/(tq^{-1};q^{-1})_∞ · Σ_m q^{-m^2} t^{2m}/(q^{-1};q^{-1})_m.
inline RationalQ cohen_lenstra_guess_coeff(int n) {
    RationalQ acc(LaurentPoly(0));
    for (int m = 0; 2 * m <= n; ++m) {
        int k = n - 2 * m;
        acc = acc + RationalQ(LaurentPoly::q(-m * m - k), q_pochhammer_inv(m) * q_pochhammer_inv(k));
    }
    return acc;
}

/// The alternating-sum formula for #{(A,B) in Mat_n(F_q)^2 : AB = BA, A^2 = B^3}.
inline LaurentPoly matrix_count_formula(int n) {
    if (n < 0) throw std::invalid_argument("matrix_count_formula: n < 0");
    LaurentPoly s;
    for (int j = 0; 2 * j <= n; ++j) {
        LaurentPoly term = q_pochhammer(n).divexact(q_pochhammer(j) * q_pochhammer(n - 2 * j));
        term = term.shifted((3 * j * j - j) / 2 + n * (n - 2 * j));
        s += (j % 2) ? -term : term;
    }
    return s;
}

/**
 * @brief |GL_n| · [t^n] (guess / (1 - t)): the affine cusp curve count
 * predicted by the guess, via the Euler product over closed points.
 */
inline RationalQ global_count_from_guess(int n) {
    RationalQ acc(LaurentPoly(0));
    for (int k = 0; k <= n; ++k) acc = acc + cohen_lenstra_guess_coeff(k);
    return acc * RationalQ(gl_order(n));
}

/// The closed form Σ_j q^{C(j+1,2)+j(d-j)} c_j t^j with Σ c_j t^j = (-t;q)_d.
inline TPoly nh_guess(int d) {
    if (d < 0) throw std::invalid_argument("nh_guess: d < 0");
    std::vector<LaurentPoly> v;
    for (int j = 0; j <= d; ++j) v.push_back(q_binomial(d, j).shifted(choose2(j + 1) + j * (d - j) + choose2(j)));
    return TPoly(std::move(v));
}

/// q^{d^2} t^d f(q^{-2d} t^{-1}) = f(t), i.e. a_{d-i} = q^{d(d-2i)} a_i.
inline bool functional_equation_check(int d, const TPoly& f) {
    if (f.degree() > d) return false;
    for (int i = 0; i <= d; ++i)
        if (f.coeff(d - i) != f.coeff(i).shifted(d * (d - 2 * i))) return false;
    return true;
}

/// Outcome of one step of the NH_d solve chain.
struct SolveResult {
    bool consistent = false;
    TPoly poly;
    std::string message;
};

/// Θ_d(f) = f(t^2) - t^d f(t)
inline TPoly theta(int d, const TPoly& f) { return f.compose_power(2) - f.shifted(d); }

/// Σ_{r<d} t^r [d r]_q (t;q)_{d-r} NH_r(q^{d-r} t)
inline TPoly theta_target(int d, const std::vector<TPoly>& known) {
    TPoly rhs;
    for (int r = 0; r < d; ++r)
        rhs += (known[static_cast<size_t>(r)].substitute(d - r) * t_pochhammer(d - r) * TPoly(q_binomial(d, r))).shifted(r);
    return rhs;
}

/**
 * @brief Solve Θ_d(NH_d) = target for NH_d with constant term 1 and leading
 * term q^{d^2} t^d, using the coefficients of t^d..t^{2d-1}, then check
 * every remaining coefficient and the functional equation.
 */
inline SolveResult solve_nh(int d, const std::vector<TPoly>& known) {
    if (static_cast<int>(known.size()) < d) throw std::invalid_argument("solve_nh: need NH_0..NH_{d-1}");
    if (d == 0) return {true, TPoly(1), "NH_0 = 1"};
    TPoly rhs = theta_target(d, known);
    std::vector<LaurentPoly> a(static_cast<size_t>(d) + 1);
    a[0] = 1;
    a[static_cast<size_t>(d)] = LaurentPoly::q(d * d);
    // coefficient of t^{d+m}: [d+m even] a_{(d+m)/2} - a_m
    for (int m = d - 1; m >= 1; --m) {
        int k = d + m;
        LaurentPoly v = -rhs.coeff(k);
        if (k % 2 == 0) v += a[static_cast<size_t>(k / 2)];
        a[static_cast<size_t>(m)] = v;
    }
    TPoly f(a);
    if (theta(d, f) != rhs) return {false, f, "overdetermined system is inconsistent at d=" + std::to_string(d)};
    if (!functional_equation_check(d, f)) return {false, f, "functional equation fails at d=" + std::to_string(d)};
    return {true, f, "consistent"};
}

/// Run the solve chain for d = 0..max_d; stops at the first inconsistency.
inline std::vector<SolveResult> solve_nh_chain(int max_d) {
    std::vector<TPoly> known;
    std::vector<SolveResult> out;
    for (int d = 0; d <= max_d; ++d) {
        SolveResult r = solve_nh(d, known);
        out.push_back(r);
        if (!r.consistent) break;
        known.push_back(r.poly);
    }
    return out;
}

/**
 * @brief NH_d(t; ζ_r) = (1 + t^r)^{d/r} for the closed form, evaluated in Z[q]/Φ_r.
 * @throws std::invalid_argument if r does not divide d.
 */
inline bool root_of_unity_check(int d, int r) {
    if (r < 1 || d % r != 0) throw std::invalid_argument("root_of_unity_check: need r | d");
    auto lhs = evaluate_root_of_unity(nh_guess(d), r);
    TPoly rhs_poly = (TPoly(1) + TPoly::monomial(1, r)).pow(static_cast<unsigned>(d / r));
    auto rhs = evaluate_root_of_unity(rhs_poly, r);
    if (lhs.size() != rhs.size()) return false;
    return lhs == rhs;
}

/// P_d(-1; q): NH_d at t = -1, after removing the factor (1 + q^d t) when d is odd.
inline LaurentPoly p_at_minus_one(int d) {
    TPoly f = nh_guess(d);
    if (d % 2) f = f.divexact(TPoly(std::vector<LaurentPoly>{1, LaurentPoly::q(d)}));
    return f.evaluate_t(-1);
}

/// Π_{odd r <= d} Φ_r(q)^{floor((d+r-1)/(2r))}
inline LaurentPoly cyclotomic_divisor(int d) {
    LaurentPoly g = 1;
    for (int r = 1; r <= d; r += 2) g *= cyclotomic_poly(r).pow(static_cast<unsigned>((d + r - 1) / (2 * r)));
    return g;
}

/// Divisibility of P_d(-1; q) by the predicted cyclotomic product.
inline bool cyclotomic_divisibility_check(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic_divisibility_check: d >= 1");
    try {
        p_at_minus_one(d).divexact(cyclotomic_divisor(d));
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

}  // namespace cuspquot
