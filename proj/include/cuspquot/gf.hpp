/**
 * @file gf.hpp
 * @brief Dense linear algebra over a prime field F_p.
 *
 * Entries are stored reduced in [0, p); products go through 64-bit
 * intermediates, so any p < 2^31 works.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuspquot {

using Fe = std::uint32_t;

/// Arithmetic in F_p.
struct PrimeField {
    Fe p;

    explicit PrimeField(Fe prime) : p(prime) {
        if (prime < 2) throw std::invalid_argument("PrimeField: p < 2");
        for (Fe k = 2; k * k <= prime; ++k)
            if (prime % k == 0) throw std::invalid_argument("PrimeField: p is not prime");
    }

    Fe add(Fe a, Fe b) const { Fe s = a + b; return s >= p ? s - p : s; }
    Fe sub(Fe a, Fe b) const { return a >= b ? a - b : a + p - b; }
    Fe neg(Fe a) const { return a == 0 ? 0 : p - a; }
    Fe mul(Fe a, Fe b) const { return static_cast<Fe>((static_cast<std::uint64_t>(a) * b) % p); }
    Fe pow(Fe a, std::uint64_t e) const {
        Fe r = 1;
        while (e) {
            if (e & 1u) r = mul(r, a);
            a = mul(a, a);
            e >>= 1u;
        }
        return r;
    }
    Fe inv(Fe a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p - 2);
    }
    /// Reduce any signed integer into [0, p).
    Fe from_int(long long v) const {
        long long r = v % static_cast<long long>(p);
        return static_cast<Fe>(r < 0 ? r + p : r);
    }
};

/// Row-major matrix over F_p.
class GFMatrix {
public:
    GFMatrix(int rows, int cols, Fe p) : r_(rows), c_(cols), f_(p), a_(static_cast<size_t>(rows * cols), 0) {}

    static GFMatrix identity(int n, Fe p) {
        GFMatrix m(n, n, p);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    Fe prime() const { return f_.p; }
    const PrimeField& field() const { return f_; }

    Fe& at(int i, int j) { return a_[static_cast<size_t>(i * c_ + j)]; }
    Fe at(int i, int j) const { return a_[static_cast<size_t>(i * c_ + j)]; }
    const std::vector<Fe>& data() const { return a_; }

    bool is_zero() const {
        for (Fe x : a_)
            if (x) return false;
        return true;
    }

    bool operator==(const GFMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const GFMatrix& o) const { return !(*this == o); }

    friend GFMatrix operator+(const GFMatrix& a, const GFMatrix& b) {
        a.check_same(b);
        GFMatrix r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.f_.add(a.a_[i], b.a_[i]);
        return r;
    }
    friend GFMatrix operator-(const GFMatrix& a, const GFMatrix& b) {
        a.check_same(b);
        GFMatrix r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.f_.sub(a.a_[i], b.a_[i]);
        return r;
    }
    GFMatrix operator-() const {
        GFMatrix r = *this;
        for (auto& x : r.a_) x = f_.neg(x);
        return r;
    }
    friend GFMatrix operator*(const GFMatrix& a, const GFMatrix& b) {
        if (a.c_ != b.r_ || a.f_.p != b.f_.p) throw std::invalid_argument("GFMatrix: shape mismatch");
        GFMatrix r(a.r_, b.c_, a.f_.p);
        const std::uint64_t p = a.f_.p;
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                std::uint64_t x = a.at(i, k);
                if (!x) continue;
                for (int j = 0; j < b.c_; ++j)
                    r.at(i, j) = static_cast<Fe>((r.at(i, j) + x * b.at(k, j)) % p);
            }
        return r;
    }

    GFMatrix transpose() const {
        GFMatrix t(c_, r_, f_.p);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    /// Block matrix [[a, b], [c, d]] from four equally shaped square blocks.
    static GFMatrix block2(const GFMatrix& a, const GFMatrix& b, const GFMatrix& c, const GFMatrix& d) {
        int n = a.rows();
        GFMatrix m(2 * n, 2 * n, a.prime());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = a.at(i, j);
                m.at(i, j + n) = b.at(i, j);
                m.at(i + n, j) = c.at(i, j);
                m.at(i + n, j + n) = d.at(i, j);
            }
        return m;
    }

    /// Horizontal concatenation [a | b].
    static GFMatrix hcat(const GFMatrix& a, const GFMatrix& b) {
        if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
        GFMatrix m(a.rows(), a.cols() + b.cols(), a.prime());
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
            for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
        }
        return m;
    }

    /// Matrix whose columns are the given vectors of length n.
    static GFMatrix from_columns(const std::vector<std::vector<Fe>>& cols, int n, Fe p) {
        GFMatrix m(n, static_cast<int>(cols.size()), p);
        for (size_t j = 0; j < cols.size(); ++j)
            for (int i = 0; i < n; ++i) m.at(i, static_cast<int>(j)) = cols[j][static_cast<size_t>(i)];
        return m;
    }

    std::vector<Fe> apply(const std::vector<Fe>& v) const {
        std::vector<Fe> out(static_cast<size_t>(r_), 0);
        for (int i = 0; i < r_; ++i) {
            std::uint64_t s = 0;
            for (int j = 0; j < c_; ++j) s = (s + static_cast<std::uint64_t>(at(i, j)) * v[static_cast<size_t>(j)]) % f_.p;
            out[static_cast<size_t>(i)] = static_cast<Fe>(s);
        }
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < r_; ++i) {
            s += "[";
            for (int j = 0; j < c_; ++j) s += (j ? " " : "") + std::to_string(at(i, j));
            s += "]\n";
        }
        return s;
    }

private:
    int r_, c_;
    PrimeField f_;
    std::vector<Fe> a_;

    void check_same(const GFMatrix& b) const {
        if (r_ != b.r_ || c_ != b.c_ || f_.p != b.f_.p) throw std::invalid_argument("GFMatrix: shape mismatch");
    }
};

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> rref_in_place(GFMatrix& m) {
    const PrimeField& f = m.field();
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col)) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        Fe iv = f.inv(m.at(row, col));
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) = f.mul(m.at(row, j), iv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || !m.at(i, col)) continue;
            Fe c = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

inline int rank(GFMatrix m) { return static_cast<int>(rref_in_place(m).size()); }

/// Basis of the null space {v : m v = 0}.
inline std::vector<std::vector<Fe>> nullspace(GFMatrix m) {
    const PrimeField f = m.field();
    auto piv = rref_in_place(m);
    std::vector<bool> is_piv(static_cast<size_t>(m.cols()), false);
    for (int c : piv) is_piv[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Fe>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_piv[static_cast<size_t>(free)]) continue;
        std::vector<Fe> v(static_cast<size_t>(m.cols()), 0);
        v[static_cast<size_t>(free)] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[static_cast<size_t>(piv[r])] = f.neg(m.at(static_cast<int>(r), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Basis of the column space of m.
inline std::vector<std::vector<Fe>> column_space(const GFMatrix& m) {
    GFMatrix t = m.transpose();
    auto piv = rref_in_place(t);
    std::vector<std::vector<Fe>> basis;
    for (size_t r = 0; r < piv.size(); ++r) {
        std::vector<Fe> v(static_cast<size_t>(m.rows()));
        for (int j = 0; j < m.rows(); ++j) v[static_cast<size_t>(j)] = t.at(static_cast<int>(r), j);
        basis.push_back(std::move(v));
    }
    return basis;
}

/**
 * @brief Visit every vector Σ c_i b_i of the span of a basis (p^k vectors).
 * @throws std::length_error if p^k exceeds the budget.
 */
inline void for_each_in_span(const std::vector<std::vector<Fe>>& basis, size_t len, Fe p, std::uint64_t budget,
                             const std::function<void(const std::vector<Fe>&)>& visit) {
    long double total = 1;
    for (size_t i = 0; i < basis.size(); ++i) total *= p;
    if (total > static_cast<long double>(budget)) throw std::length_error("span enumeration exceeds budget");
    PrimeField f(p);
    std::vector<Fe> coef(basis.size(), 0), v(len, 0);
    while (true) {
        visit(v);
        size_t k = 0;
        for (; k < basis.size(); ++k) {
            // bump coordinate k and update v incrementally
            for (size_t i = 0; i < len; ++i) v[i] = f.add(v[i], basis[k][i]);
            if (++coef[k] < p) break;
            coef[k] = 0;  // wrapped: v already returned to its previous value in coordinate k
        }
        if (k == basis.size()) return;
    }
}

}  // namespace cuspquot
