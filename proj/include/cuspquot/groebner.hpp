/**
 * @file groebner.hpp
 * @brief Standard bases for submodules of m·F, F = R^d, R = k[[T^2, T^3]], k = F_p.
 *
 * Monomials T^a u_i are ordered by T-degree first and basis index second;
 * "leading" always means the least monomial in that order. Elements are
 * truncated modulo T^N F. For a submodule of codimension n the window
 * N = 2n + 4 loses nothing, since such a submodule contains T^{2n+2} F.
 *
 * Define CUSPQUOT_CHECKED to verify every division expression on the fly.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace cuspquot {

/// Membership in the semigroup {0, 2, 3, 4, ...} of exponents of R.
inline bool in_semigroup(int k) { return k == 0 || k >= 2; }

/// T^t u_basis; the defaulted comparison is exactly the monomial order.
struct Monomial {
    int t = 0;
    int basis = 1;

    auto operator<=>(const Monomial&) const = default;

    std::string to_string() const {
        std::string s = "T";
        if (t != 1) s += "^" + std::to_string(t);
        return s + "*u" + std::to_string(basis);
    }
};

/// Quotient T-degree k with T^k·mu = nu, if it lies in R.
inline std::optional<int> divides(const Monomial& mu, const Monomial& nu) {
    if (mu.basis != nu.basis) return std::nullopt;
    int k = nu.t - mu.t;
    if (k < 0 || !in_semigroup(k)) return std::nullopt;
    return k;
}

/// Minimal common multiples of two monomials under R-divisibility.
inline std::vector<Monomial> lcm_set(const Monomial& mu, const Monomial& nu) {
    if (mu.basis != nu.basis) return {};
    int hi = std::max(mu.t, nu.t);
    std::vector<Monomial> common;
    // every common multiple is divisible by one of degree < hi + 4
    for (int m = hi; m < hi + 4; ++m) {
        Monomial w{m, mu.basis};
        if (divides(mu, w) && divides(nu, w)) common.push_back(w);
    }
    std::vector<Monomial> minimal;
    for (const auto& w : common) {
        bool min = true;
        for (const auto& v : common)
            if (v != w && divides(v, w)) min = false;
        if (min) minimal.push_back(w);
    }
    return minimal;
}

/**
 * @brief Element of m·F / T^N F over F_p.
 *
 * Dense coefficients indexed by (t - 2)·d + (basis - 1), which is the
 * monomial order, so the leading term is the first nonzero entry.
 */
class Element {
public:
    Element(int d, int N, Fe p) : d_(d), N_(N), f_(p), c_(static_cast<size_t>(d * std::max(N - 2, 0)), 0) {
        if (d < 1 || N < 2) throw std::invalid_argument("Element: need d >= 1 and N >= 2");
    }

    static Element monomial(int d, int N, Fe p, const Monomial& m, Fe c = 1) {
        Element e(d, N, p);
        e.set(m, c);
        return e;
    }

    int d() const { return d_; }
    int trunc() const { return N_; }
    Fe prime() const { return f_.p; }
    const PrimeField& field() const { return f_; }
    size_t size() const { return c_.size(); }
    const std::vector<Fe>& coeffs() const { return c_; }

    Monomial monomial_at(size_t idx) const {
        return {static_cast<int>(idx) / d_ + 2, static_cast<int>(idx) % d_ + 1};
    }
    std::optional<size_t> index_of(const Monomial& m) const {
        if (m.t < 2 || m.t >= N_ || m.basis < 1 || m.basis > d_) return std::nullopt;
        return static_cast<size_t>((m.t - 2) * d_ + m.basis - 1);
    }

    Fe coeff(const Monomial& m) const {
        auto i = index_of(m);
        return i ? c_[*i] : 0;
    }
    Fe coeff_at(size_t idx) const { return c_[idx]; }

    /// Set a coefficient; monomials at or beyond the truncation are dropped.
    void set(const Monomial& m, Fe c) {
        if (m.t < 2) throw std::invalid_argument("Element: monomial outside m·F");
        auto i = index_of(m);
        if (i) c_[*i] = c % f_.p;
    }

    bool is_zero() const {
        for (Fe x : c_)
            if (x) return false;
        return true;
    }

    std::optional<size_t> lead_index() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i]) return i;
        return std::nullopt;
    }
    Monomial lead() const {
        auto i = lead_index();
        if (!i) throw std::domain_error("Element: zero element has no leading term");
        return monomial_at(*i);
    }
    Fe lead_coeff() const { return c_[*lead_index()]; }

    /// Nonzero terms in increasing monomial order.
    std::vector<std::pair<Monomial, Fe>> terms() const {
        std::vector<std::pair<Monomial, Fe>> out;
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i]) out.emplace_back(monomial_at(i), c_[i]);
        return out;
    }

    /// T^k · this, truncated; k must lie in the semigroup.
    Element times_T(int k) const {
        if (!in_semigroup(k)) throw std::invalid_argument("Element: T^k not in R");
        Element r(d_, N_, f_.p);
        size_t shift = static_cast<size_t>(k * d_);
        for (size_t i = 0; i + shift < c_.size(); ++i) r.c_[i + shift] = c_[i];
        return r;
    }

    Element scaled(Fe s) const {
        Element r = *this;
        for (auto& x : r.c_) x = f_.mul(x, s);
        return r;
    }

    /// this += s · T^k · g
    void add_multiple(const Element& g, Fe s, int k) {
        check_compatible(g);
        if (!in_semigroup(k)) throw std::invalid_argument("Element: T^k not in R");
        size_t shift = static_cast<size_t>(k * d_);
        for (size_t i = 0; i + shift < c_.size(); ++i)
            if (g.c_[i]) c_[i + shift] = f_.add(c_[i + shift], f_.mul(s, g.c_[i]));
    }

    Element monic() const { return scaled(f_.inv(lead_coeff())); }

    friend Element operator+(Element a, const Element& b) {
        a.add_multiple(b, 1, 0);
        return a;
    }
    friend Element operator-(Element a, const Element& b) {
        a.add_multiple(b, a.f_.neg(1), 0);
        return a;
    }

    bool operator==(const Element& o) const { return d_ == o.d_ && N_ == o.N_ && f_.p == o.f_.p && c_ == o.c_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    /// Text form such as "T^3*u1 + 2*T^4*u1", terms in increasing order.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (const auto& [m, c] : terms()) {
            if (!s.empty()) s += " + ";
            if (c != 1) s += std::to_string(c) + "*";
            s += m.to_string();
        }
        return s;
    }

    void check_compatible(const Element& g) const {
        if (g.d_ != d_ || g.N_ != N_ || g.f_.p != f_.p) throw std::invalid_argument("Element: incompatible ambient");
    }

private:
    int d_, N_;
    PrimeField f_;
    std::vector<Fe> c_;
};

/// f = remainder + Σ quotients[i] · G[i], where quotients[i][k] is the coefficient of T^k.
struct Division {
    std::vector<std::vector<Fe>> quotients;
    Element remainder;
};

/**
 * @brief Check a division expression: the identity holds modulo T^N, the
 * remainder has no term divisible by a leading monomial, and no q_i·g_i has
 * a term below LT(f).
 */
inline bool division_is_sound(const Element& f, const std::vector<Element>& G, const Division& dv) {
    Element acc = dv.remainder;
    std::optional<size_t> lf = f.lead_index();
    for (size_t i = 0; i < G.size(); ++i) {
        Monomial lg = G[i].lead();
        for (size_t k = 0; k < dv.quotients[i].size(); ++k) {
            Fe c = dv.quotients[i][k];
            if (!c) continue;
            acc.add_multiple(G[i], c, static_cast<int>(k));
            Monomial lt{lg.t + static_cast<int>(k), lg.basis};
            auto li = f.index_of(lt);
            if (li && lf && *li < *lf) return false;
        }
    }
    if (acc != f) return false;
    for (const auto& [m, c] : dv.remainder.terms())
        for (const auto& g : G)
            if (divides(g.lead(), m)) return false;
    return true;
}

/**
 * @brief Division with remainder: repeatedly kill the least divisible term,
 * using the first divisor in list order whose leading monomial divides it.
 */
inline Division divide(const Element& f, const std::vector<Element>& G) {
    const PrimeField& fld = f.field();
    Division dv{std::vector<std::vector<Fe>>(G.size(), std::vector<Fe>(static_cast<size_t>(f.trunc()), 0)), f};
    std::vector<Monomial> lts;
    std::vector<Fe> inv_lc;
    for (const auto& g : G) {
        f.check_compatible(g);
        lts.push_back(g.lead());
        inv_lc.push_back(fld.inv(g.lead_coeff()));
    }
    Element& r = dv.remainder;
    for (size_t idx = 0; idx < r.size(); ++idx) {
        Fe c = r.coeff_at(idx);
        if (!c) continue;
        Monomial m = r.monomial_at(idx);
        for (size_t i = 0; i < G.size(); ++i) {
            auto k = divides(lts[i], m);
            if (!k) continue;
            Fe s = fld.mul(c, inv_lc[i]);
            r.add_multiple(G[i], fld.neg(s), *k);
            dv.quotients[i][static_cast<size_t>(*k)] = fld.add(dv.quotients[i][static_cast<size_t>(*k)], s);
            break;
        }
    }
#ifdef CUSPQUOT_CHECKED
    if (!division_is_sound(f, G, dv)) throw std::logic_error("divide: unsound division expression");
#endif
    return dv;
}

/// Leading monomials in list order.
inline std::vector<Monomial> leading_monomials(const std::vector<Element>& G) {
    std::vector<Monomial> out;
    for (const auto& g : G) out.push_back(g.lead());
    return out;
}

/// True iff some monomial of the list divides m.
inline bool in_monomial_module(const std::vector<Monomial>& lts, const Monomial& m) {
    for (const auto& l : lts)
        if (divides(l, m)) return true;
    return false;
}

/**
 * @brief Reduced pre-basis conditions: monic leading terms, mutually
 * indivisible leading monomials, and no nonleading term divisible by any
 * leading monomial.
 */
inline bool is_prebasis(const std::vector<Element>& G) {
    auto lts = leading_monomials(G);
    for (size_t i = 0; i < G.size(); ++i) {
        if (G[i].lead_coeff() != 1) return false;
        for (size_t j = 0; j < G.size(); ++j)
            if (i != j && divides(lts[i], lts[j])) return false;
        for (const auto& [m, c] : G[i].terms())
            if (m != lts[i] && in_monomial_module(lts, m)) return false;
    }
    return true;
}

/// S-element (m / LT g)·g/lc(g) - (m / LT h)·h/lc(h) for a common multiple m.
inline Element s_element(const Element& g, const Element& h, const Monomial& m) {
    const PrimeField& f = g.field();
    Element s(g.d(), g.trunc(), g.prime());
    s.add_multiple(g, f.inv(g.lead_coeff()), *divides(g.lead(), m));
    s.add_multiple(h, f.neg(f.inv(h.lead_coeff())), *divides(h.lead(), m));
    return s;
}

/// Buchberger criterion over all pairs and all minimal common multiples.
inline bool is_groebner_general(const std::vector<Element>& G) {
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j)
            for (const auto& m : lcm_set(G[i].lead(), G[j].lead())) {
                if (m.t >= G[i].trunc()) continue;
                if (!divide(s_element(G[i], G[j], m), G).remainder.is_zero()) return false;
            }
    return true;
}

/**
 * @brief Cusp criterion: for each basis vector carrying two generators
 * g0, g1 with leading degrees a+2, a+3, both T^3 g0 - T^2 g1 and
 * T^4 g0 - T^3 g1 reduce to zero. Other shapes fall back to the general test.
 */
inline bool is_groebner(const std::vector<Element>& G) {
    if (G.empty()) return true;
    int d = G[0].d();
    std::vector<std::vector<size_t>> by_basis(static_cast<size_t>(d) + 1);
    for (size_t i = 0; i < G.size(); ++i) by_basis[static_cast<size_t>(G[i].lead().basis)].push_back(i);
    for (const auto& idx : by_basis) {
        if (idx.size() > 2) return is_groebner_general(G);
        if (idx.size() == 2) {
            const Element* g0 = &G[idx[0]];
            const Element* g1 = &G[idx[1]];
            if (g0->lead().t > g1->lead().t) std::swap(g0, g1);
            if (g1->lead().t != g0->lead().t + 1) return is_groebner_general(G);
        }
    }
    const PrimeField& f = G[0].field();
    for (const auto& idx : by_basis) {
        if (idx.size() != 2) continue;
        const Element* g0 = &G[idx[0]];
        const Element* g1 = &G[idx[1]];
        if (g0->lead().t > g1->lead().t) std::swap(g0, g1);
        Element a = g0->monic(), b = g1->monic();
        for (int k : {3, 4}) {
            Element s(a.d(), a.trunc(), a.prime());
            s.add_multiple(a, 1, k);
            s.add_multiple(b, f.neg(1), k - 1);
            if (!divide(s, G).remainder.is_zero()) return false;
        }
    }
    return true;
}

/**
 * @brief A reduced Groebner basis, generators sorted by leading monomial.
 */
class ReducedGB {
public:
    ReducedGB() = default;
    explicit ReducedGB(std::vector<Element> gens) : g_(std::move(gens)) {
        std::sort(g_.begin(), g_.end(), [](const Element& a, const Element& b) { return a.lead() < b.lead(); });
    }

    const std::vector<Element>& generators() const { return g_; }
    std::vector<Monomial> leading() const { return leading_monomials(g_); }
    bool operator==(const ReducedGB& o) const { return g_ == o.g_; }
    bool operator!=(const ReducedGB& o) const { return !(*this == o); }

    /// Monomials of m·F (below the truncation) outside the leading module.
    std::vector<Monomial> standard_monomials() const {
        if (g_.empty()) throw std::domain_error("standard_monomials: empty basis has infinite codimension");
        auto lts = leading();
        int d = g_[0].d(), N = g_[0].trunc();
        // finite codimension needs the two top degrees covered for every basis vector
        for (int i = 1; i <= d; ++i)
            for (int t : {N - 2, N - 1})
                if (t >= 2 && !in_monomial_module(lts, {t, i}))
                    throw std::domain_error("standard_monomials: codimension not finite within the truncation");
        std::vector<Monomial> out;
        for (int t = 2; t < N; ++t)
            for (int i = 1; i <= d; ++i)
                if (!in_monomial_module(lts, {t, i})) out.push_back({t, i});
        return out;
    }

    int codim() const { return static_cast<int>(standard_monomials().size()); }

    /// One generator per line.
    std::string to_string() const {
        std::string s;
        for (const auto& g : g_) s += g.to_string() + "\n";
        return s;
    }

private:
    std::vector<Element> g_;
};

/// True iff f lies in the submodule with Groebner basis gb.
inline bool membership(const Element& f, const ReducedGB& gb) {
    return divide(f, gb.generators()).remainder.is_zero();
}

/**
 * @brief Complete generators to a Groebner basis and reduce it.
 *
 * Adds nonzero S-element remainders until the general criterion holds, drops
 * generators with divisible leading monomials, then reduces every tail.
 * @throws std::domain_error if the codimension is infinite or exceeds (N-4)/2.
 */
inline ReducedGB reduce(const std::vector<Element>& generators) {
    std::vector<Element> G;
    for (const auto& g : generators)
        if (!g.is_zero()) G.push_back(g.monic());
    if (G.empty()) throw std::domain_error("reduce: zero submodule has infinite codimension");

    // Buchberger completion
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < G.size() && !grew; ++i)
            for (size_t j = i + 1; j < G.size() && !grew; ++j)
                for (const auto& m : lcm_set(G[i].lead(), G[j].lead())) {
                    if (m.t >= G[i].trunc()) continue;
                    Element r = divide(s_element(G[i], G[j], m), G).remainder;
                    if (!r.is_zero()) {
                        G.push_back(r.monic());
                        grew = true;
                        break;
                    }
                }
    }

    // minimal leading monomials; among equal leads keep the first
    std::vector<Element> M;
    for (size_t i = 0; i < G.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < G.size() && keep; ++j) {
            if (i == j) continue;
            if (G[j].lead() == G[i].lead() ? j < i : divides(G[j].lead(), G[i].lead()).has_value()) keep = false;
        }
        if (keep) M.push_back(G[i]);
    }

    // reduce tails
    std::vector<Element> R;
    for (const auto& g : M) {
        Element tail = g;
        tail.set(g.lead(), 0);
        Element r = divide(tail, M).remainder;
        r.set(g.lead(), 1);
        R.push_back(r);
    }
    ReducedGB gb(std::move(R));
    int n = gb.codim();
    int N = gb.generators()[0].trunc();
    if (2 * n + 4 > N) throw std::domain_error("reduce: codimension exceeds the bound certified by the truncation");
    return gb;
}

}  // namespace cuspquot
