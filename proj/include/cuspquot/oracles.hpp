/**
 * @file oracles.hpp
 * @brief Brute-force point counts over small prime fields.
 *
 * Nothing here uses standard bases or the datum combinatorics for the
 * submodule and matrix counts; they are plain enumeration plus linear
 * algebra. The stratum counts enumerate prebases and test them with the
 * Buchberger criterion.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "gf.hpp"
#include "groebner.hpp"
#include "qalgebra.hpp"
#include "strata.hpp"
#include "varieties.hpp"

namespace cuspquot {

namespace detail {

/// Number of k-dimensional subspaces of F_p^n, as a floating estimate for budget checks.
inline long double subspace_count(int n, int k, Fe p) {
    long double c = 1;
    for (int i = 0; i < k; ++i)
        c *= (std::pow(static_cast<long double>(p), n - i) - 1) / (std::pow(static_cast<long double>(p), i + 1) - 1);
    return c;
}

/// Visit every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& visit) {
    std::vector<int> c(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i;
    while (true) {
        visit(c);
        int i = k - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++c[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
    }
}

/// Free (row, column) positions of a reduced echelon matrix with the given pivots.
inline std::vector<std::pair<int, int>> echelon_free_slots(const std::vector<int>& piv, int cols) {
    std::vector<bool> is_piv(static_cast<size_t>(cols), false);
    for (int c : piv) is_piv[static_cast<size_t>(c)] = true;
    std::vector<std::pair<int, int>> slots;
    for (size_t r = 0; r < piv.size(); ++r)
        for (int c = piv[r] + 1; c < cols; ++c)
            if (!is_piv[static_cast<size_t>(c)]) slots.emplace_back(static_cast<int>(r), c);
    return slots;
}

/// Odometer over F_p^k; visit returns nothing, the digits are passed by reference.
template <class F>
void for_each_digits(size_t k, Fe p, F&& visit) {
    std::vector<Fe> dig(k, 0);
    while (true) {
        visit(dig);
        size_t i = 0;
        for (; i < k; ++i) {
            if (++dig[i] < p) break;
            dig[i] = 0;
        }
        if (i == k) return;
    }
}

/// Annihilator enumeration over F_2 with rows packed into 64-bit words.
inline std::uint64_t count_quot_f2(int d, int n, int D) {
    std::uint64_t total = 0;
    std::vector<std::uint64_t> rows(static_cast<size_t>(n));
    for_each_subset(D, n, [&](const std::vector<int>& piv) {
        auto slots = echelon_free_slots(piv, D);
        for_each_digits(slots.size(), 2, [&](const std::vector<Fe>& dig) {
            for (int r = 0; r < n; ++r) rows[static_cast<size_t>(r)] = std::uint64_t{1} << piv[static_cast<size_t>(r)];
            for (size_t s = 0; s < slots.size(); ++s)
                if (dig[s]) rows[static_cast<size_t>(slots[s].first)] |= std::uint64_t{1} << slots[s].second;
            for (int k : {2, 3})
                for (int r = 0; r < n; ++r) {
                    // (phi ∘ T^k)_j = phi_{j + k d}
                    std::uint64_t v = rows[static_cast<size_t>(r)] >> (k * d);
                    for (int s = 0; s < n; ++s)
                        if ((v >> piv[static_cast<size_t>(s)]) & 1u) v ^= rows[static_cast<size_t>(s)];
                    if (v) return;
                }
            ++total;
        });
    });
    return total;
}

/// Annihilator enumeration over a general F_p.
inline std::uint64_t count_quot_fp(int d, int n, int D, Fe p) {
    PrimeField f(p);
    std::uint64_t total = 0;
    std::vector<std::vector<Fe>> rows(static_cast<size_t>(n), std::vector<Fe>(static_cast<size_t>(D)));
    std::vector<Fe> v(static_cast<size_t>(D));
    for_each_subset(D, n, [&](const std::vector<int>& piv) {
        auto slots = echelon_free_slots(piv, D);
        for_each_digits(slots.size(), p, [&](const std::vector<Fe>& dig) {
            for (int r = 0; r < n; ++r) {
                std::fill(rows[static_cast<size_t>(r)].begin(), rows[static_cast<size_t>(r)].end(), 0);
                rows[static_cast<size_t>(r)][static_cast<size_t>(piv[static_cast<size_t>(r)])] = 1;
            }
            for (size_t s = 0; s < slots.size(); ++s)
                rows[static_cast<size_t>(slots[s].first)][static_cast<size_t>(slots[s].second)] = dig[s];
            for (int k : {2, 3})
                for (int r = 0; r < n; ++r) {
                    const auto& row = rows[static_cast<size_t>(r)];
                    for (int j = 0; j < D; ++j) v[static_cast<size_t>(j)] = j + k * d < D ? row[static_cast<size_t>(j + k * d)] : 0;
                    for (int s = 0; s < n; ++s) {
                        Fe c = v[static_cast<size_t>(piv[static_cast<size_t>(s)])];
                        if (!c) continue;
                        const auto& rs = rows[static_cast<size_t>(s)];
                        for (int j = 0; j < D; ++j) v[static_cast<size_t>(j)] = f.sub(v[static_cast<size_t>(j)], f.mul(c, rs[static_cast<size_t>(j)]));
                    }
                    for (Fe x : v)
                        if (x) return;
                }
            ++total;
        });
    });
    return total;
}

}  // namespace detail

/**
 * @brief |Hilb_{d,n}(R)(F_p)|: codimension-n R-submodules of m·F.
 *
 * Such a submodule contains m^{n+1}F ⊇ T^{2n+2}F, so it is a subspace of
 * W = m·F / T^{2n+2}F (dimension 2nd) stable under T^2 and T^3. Subspaces
 * are visited through their annihilators in reduced echelon form; a
 * subspace is stable under M iff its annihilator is stable under φ ↦ φ∘M.
 * @param force_generic use the general F_p path even for p = 2.
 * @throws std::length_error if the number of subspaces exceeds the budget.
 */
inline std::uint64_t count_quot_bruteforce(int d, int n, Fe p, std::uint64_t budget = kDefaultBudget,
                                           bool force_generic = false) {
    if (d < 1 || n < 0) throw std::invalid_argument("count_quot_bruteforce: need d >= 1, n >= 0");
    PrimeField check(p);
    if (n == 0) return 1;
    const int D = 2 * n * d;
    if (detail::subspace_count(D, n, p) > static_cast<long double>(budget))
        throw std::length_error("count_quot_bruteforce: subspace enumeration exceeds budget");
    if (p == 2 && D <= 64 && !force_generic) return detail::count_quot_f2(d, n, D);
    return detail::count_quot_fp(d, n, D, p);
}

namespace detail {

inline bool is_nilpotent(const GFMatrix& M) {
    GFMatrix P = M;
    for (int i = 1; i < M.rows(); ++i) P = P * M;
    return P.is_zero();
}

/// Pairs (A, B) with AB = BA and A^2 = B^3, optionally both nilpotent.
inline BigInt count_cusp_pairs(int n, Fe p, bool nilpotent, std::uint64_t budget) {
    if (n < 0) throw std::invalid_argument("count pairs: n < 0");
    if (n == 0) return 1;
    PrimeField check(p);
    const int nn = n * n;
    long double bcount = std::pow(static_cast<long double>(p), nn);
    if (bcount > static_cast<long double>(budget)) throw std::length_error("count pairs: B enumeration exceeds budget");
    BigInt total = 0;
    for_each_digits(static_cast<size_t>(nn), p, [&](const std::vector<Fe>& dig) {
        GFMatrix B(n, n, p);
        for (int i = 0; i < nn; ++i) B.at(i / n, i % n) = dig[static_cast<size_t>(i)];
        if (nilpotent && !is_nilpotent(B)) return;
        GFMatrix B3 = B * B * B;
        // commutant of B: X with XB - BX = 0, as a nullspace in vec(X)
        GFMatrix L(nn, nn, p);
        for (int k = 0; k < nn; ++k) {
            GFMatrix E(n, n, p);
            E.at(k / n, k % n) = 1;
            GFMatrix C = E * B - B * E;
            for (int i = 0; i < nn; ++i) L.at(i, k) = C.data()[static_cast<size_t>(i)];
        }
        std::uint64_t hits = 0;
        for_each_in_span(nullspace(L), static_cast<size_t>(nn), p, budget, [&](const std::vector<Fe>& v) {
            GFMatrix A(n, n, p);
            for (int i = 0; i < nn; ++i) A.at(i / n, i % n) = v[static_cast<size_t>(i)];
            if (A * A != B3) return;
            if (nilpotent && !is_nilpotent(A)) return;
            ++hits;
        });
        total += hits;
    });
    return total;
}

}  // namespace detail

/// Commuting nilpotent pairs (A, B) in Mat_n(F_p) with A^2 = B^3.
inline BigInt count_nilpotent_pairs(int n, Fe p, std::uint64_t budget = kDefaultBudget) {
    return detail::count_cusp_pairs(n, p, true, budget);
}

/// All commuting pairs (A, B) in Mat_n(F_p) with A^2 = B^3.
inline BigInt count_all_pairs(int n, Fe p, std::uint64_t budget = kDefaultBudget) {
    return detail::count_cusp_pairs(n, p, false, budget);
}

/// |GL_n(F_p)|
inline BigInt gl_count(int n, Fe p) { return gl_order(n).evaluate_int(BigInt(p)); }

// ---------------------------------------------------------------------------
// Strata
// ---------------------------------------------------------------------------

/// One prebasis generator: leading monomial plus the monomials its tail may use.
struct StratumSlot {
    Monomial lead;
    std::vector<Monomial> tail;
};

/// Generators of a reduced prebasis with leading datum alpha: tails in Δ(alpha) above the lead.
inline std::vector<StratumSlot> stratum_slots(const LeadingTermDatum& alpha) {
    std::vector<StratumSlot> out;
    for (const auto& m : alpha.corners()) out.push_back({m, alpha.standard_above(m)});
    return out;
}

/// Truncation used for a stratum: 2n + 4.
inline int stratum_truncation(const LeadingTermDatum& alpha) { return 2 * alpha.n() + 4; }

/// The prebasis with the given tail coefficients, slot by slot.
inline std::vector<Element> build_prebasis(const LeadingTermDatum& alpha, Fe p, const std::vector<StratumSlot>& slots,
                                           const std::vector<std::vector<Fe>>& tails) {
    const int d = alpha.d(), N = stratum_truncation(alpha);
    std::vector<Element> G;
    for (size_t i = 0; i < slots.size(); ++i) {
        Element g = Element::monomial(d, N, p, slots[i].lead);
        for (size_t k = 0; k < slots[i].tail.size(); ++k) g.set(slots[i].tail[k], tails[i][k]);
        G.push_back(std::move(g));
    }
    return G;
}

/**
 * @brief Count reduced prebases with leading datum alpha that are standard bases.
 *
 * Slots whose leading monomial appears in `fixed` keep that tail; all other
 * tails run over every coefficient vector.
 * @throws std::length_error if p^(free coefficients) exceeds the budget.
 */
inline BigInt count_stratum(const LeadingTermDatum& alpha, Fe p, const std::map<Monomial, std::vector<Fe>>& fixed,
                            std::uint64_t budget = kDefaultBudget) {
    PrimeField check(p);
    auto slots = stratum_slots(alpha);
    std::vector<std::vector<Fe>> tails;
    std::vector<std::pair<size_t, size_t>> free;
    for (size_t i = 0; i < slots.size(); ++i) {
        auto it = fixed.find(slots[i].lead);
        if (it != fixed.end()) {
            if (it->second.size() != slots[i].tail.size()) throw std::invalid_argument("count_stratum: fixed tail has wrong length");
            tails.push_back(it->second);
        } else {
            tails.emplace_back(slots[i].tail.size(), 0);
            for (size_t k = 0; k < slots[i].tail.size(); ++k) free.emplace_back(i, k);
        }
    }
    if (std::pow(static_cast<long double>(p), free.size()) > static_cast<long double>(budget))
        throw std::length_error("count_stratum: parameter space exceeds budget");
    BigInt total = 0;
    detail::for_each_digits(free.size(), p, [&](const std::vector<Fe>& dig) {
        for (size_t s = 0; s < free.size(); ++s) tails[free[s].first][free[s].second] = dig[s];
        if (is_groebner(build_prebasis(alpha, p, slots, tails))) ++total;
    });
    return total;
}

/// |Hilb(alpha)(F_p)| by enumeration of prebases.
inline BigInt count_stratum_bruteforce(const LeadingTermDatum& alpha, Fe p, std::uint64_t budget = kDefaultBudget) {
    return count_stratum(alpha, p, {}, budget);
}

/// |Hilb^0(alpha)(F_p)|: every generator g_i^0 equal to its leading monomial.
inline BigInt count_hilb0_bruteforce(const LeadingTermDatum& alpha, Fe p, std::uint64_t budget = kDefaultBudget) {
    std::map<Monomial, std::vector<Fe>> fixed;
    for (int i = 1; i <= alpha.d(); ++i) fixed[alpha.mu0(i)] = std::vector<Fe>(alpha.standard_above(alpha.mu0(i)).size(), 0);
    return count_stratum(alpha, p, fixed, budget);
}

/**
 * @brief Codimension of the R-submodule generated by G, by linear algebra
 * on the spans of T^k g inside m·F / T^N F.
 */
inline int span_codim(const std::vector<Element>& G) {
    if (G.empty()) throw std::invalid_argument("span_codim: no generators");
    const int N = G[0].trunc();
    const int dim = static_cast<int>(G[0].size());
    std::vector<std::vector<Fe>> cols;
    for (const auto& g : G)
        for (int k = 0; k < N; ++k)
            if (in_semigroup(k)) cols.push_back(g.times_T(k).coeffs());
    return dim - rank(GFMatrix::from_columns(cols, dim, G[0].prime()));
}

}  // namespace cuspquot
