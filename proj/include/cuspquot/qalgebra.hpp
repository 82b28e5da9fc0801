/**
 * @file qalgebra.hpp
 * @brief Exact arithmetic in the formal variable q and series in t over it.
 *
 * - LaurentPoly: integer Laurent polynomials in q (q stands for a prime
 *   power or for the Lefschetz class).
 * - RationalQ: quotients of Laurent polynomials, compared by cross-multiplying.
 * - TPoly / TSeries: polynomials and rational functions in t with
 *   LaurentPoly coefficients.
 * - q-Pochhammer symbols, Gaussian binomials and cyclotomic evaluation.
 *
 * All values are immutable once built; nothing here uses floating point.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace cuspquot {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Integer power b^e for e >= 0.
inline BigInt ipow(const BigInt& b, unsigned e) {
    BigInt r = 1, x = b;
    while (e) {
        if (e & 1u) r *= x;
        x *= x;
        e >>= 1u;
    }
    return r;
}

/// Rational power b^e for any integer e (b != 0 when e < 0).
inline BigRational rpow(const BigRational& b, int e) {
    if (e >= 0) {
        BigRational r = 1, x = b;
        unsigned k = static_cast<unsigned>(e);
        while (k) {
            if (k & 1u) r *= x;
            x *= x;
            k >>= 1u;
        }
        return r;
    }
    if (b == 0) throw std::domain_error("rpow: zero to a negative power");
    return BigRational(1) / rpow(b, -e);
}

// ---------------------------------------------------------------------------
// LaurentPoly
// ---------------------------------------------------------------------------

/**
 * @brief Integer Laurent polynomial Σ c_e q^e.
 *
 * Stored densely from the lowest exponent; both ends are trimmed so the
 * zero polynomial has no coefficients.
 */
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) { if (c != 0) c_.push_back(BigInt(c)); }  // NOLINT implicit
    LaurentPoly(const BigInt& c) { if (c != 0) c_.push_back(c); }       // NOLINT implicit

    /// c·q^e
    static LaurentPoly monomial(const BigInt& c, int e) {
        LaurentPoly r;
        if (c != 0) {
            r.low_ = e;
            r.c_.push_back(c);
        }
        return r;
    }
    /// q^e
    static LaurentPoly q(int e = 1) { return monomial(1, e); }

    /// Build from (exponent, coefficient) pairs; repeated exponents add up.
    static LaurentPoly from_terms(const std::vector<std::pair<int, BigInt>>& terms) {
        LaurentPoly r;
        for (const auto& [e, c] : terms) r += monomial(c, e);
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    int min_exp() const { return low_; }
    int max_exp() const { return low_ + static_cast<int>(c_.size()) - 1; }

    BigInt coeff(int e) const {
        if (c_.empty() || e < low_ || e > max_exp()) return 0;
        return c_[static_cast<size_t>(e - low_)];
    }

    /// Nonzero terms in increasing exponent order.
    std::vector<std::pair<int, BigInt>> terms() const {
        std::vector<std::pair<int, BigInt>> out;
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), c_[i]);
        return out;
    }

    /// True iff this is ±q^k, i.e. a unit of Z[q, q^-1].
    bool is_unit() const {
        return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1);
    }

    bool is_constant() const { return c_.empty() || (c_.size() == 1 && low_ == 0); }

    bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return add_scaled(o, 1); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return add_scaled(o, -1); }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.low_ = a.low_ + b.low_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly pow(unsigned e) const {
        LaurentPoly r = 1, x = *this;
        while (e) {
            if (e & 1u) r *= x;
            x *= x;
            e >>= 1u;
        }
        return r;
    }

    /// Multiply by q^e.
    LaurentPoly shifted(int e) const {
        LaurentPoly r = *this;
        if (!r.is_zero()) r.low_ += e;
        return r;
    }

    /// Formal substitution q -> q^k; k = 0 evaluates at q = 1.
    LaurentPoly substitute_q(int k) const {
        if (k == 0) return LaurentPoly(sum_of_coeffs());
        LaurentPoly r;
        for (const auto& [e, c] : terms()) r += monomial(c, e * k);
        return r;
    }

    BigInt sum_of_coeffs() const {
        BigInt s = 0;
        for (const auto& x : c_) s += x;
        return s;
    }

    /// Exact evaluation at a rational point (nonzero if negative exponents occur).
    BigRational evaluate(const BigRational& x) const {
        if (is_zero()) return 0;
        BigRational acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + BigRational(c_[i]);
        return acc * rpow(x, low_);
    }

    /// Exact evaluation at an integer; requires no negative exponents.
    BigInt evaluate_int(const BigInt& x) const {
        if (is_zero()) return 0;
        if (low_ < 0) throw std::domain_error("evaluate_int: negative exponent");
        BigInt acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc * ipow(x, static_cast<unsigned>(low_));
    }

    /**
     * @brief Exact quotient *this / d.
     * @throws std::domain_error if d is zero or does not divide exactly in Z[q, q^-1].
     */
    LaurentPoly divexact(const LaurentPoly& d) const {
        if (d.is_zero()) throw std::domain_error("divexact: division by zero");
        if (is_zero()) return {};
        std::vector<BigInt> rem = c_;
        const auto& dv = d.c_;
        if (rem.size() < dv.size()) throw std::domain_error("divexact: not divisible");
        size_t qn = rem.size() - dv.size() + 1;
        std::vector<BigInt> quo(qn, BigInt(0));
        for (size_t k = qn; k-- > 0;) {
            const BigInt& top = rem[k + dv.size() - 1];
            if (top == 0) continue;
            if (top % dv.back() != 0) throw std::domain_error("divexact: not divisible");
            BigInt f = top / dv.back();
            quo[k] = f;
            for (size_t j = 0; j < dv.size(); ++j) rem[k + j] -= f * dv[j];
        }
        for (const auto& x : rem)
            if (x != 0) throw std::domain_error("divexact: not divisible");
        LaurentPoly r;
        r.low_ = low_ - d.low_;
        r.c_ = std::move(quo);
        r.trim();
        return r;
    }

    /// Human form, highest exponent first: "10*q^12 - 5*q^11 + 1".
    std::string to_string(const std::string& var = "q") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = c_.size(); i-- > 0;) {
            BigInt c = c_[i];
            if (c == 0) continue;
            int e = low_ + static_cast<int>(i);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            BigInt a = c < 0 ? BigInt(-c) : c;
            if (e == 0) {
                os << a;
            } else {
                if (a != 1) os << a << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    int low_ = 0;
    std::vector<BigInt> c_;

    LaurentPoly& add_scaled(const LaurentPoly& o, int sign) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = o;
            if (sign < 0)
                for (auto& x : c_) x = -x;
            return *this;
        }
        int lo = std::min(low_, o.low_);
        int hi = std::max(max_exp(), o.max_exp());
        std::vector<BigInt> n(static_cast<size_t>(hi - lo + 1), BigInt(0));
        for (size_t i = 0; i < c_.size(); ++i) n[static_cast<size_t>(low_ - lo) + i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) {
            auto& slot = n[static_cast<size_t>(o.low_ - lo) + i];
            if (sign > 0) slot += o.c_[i]; else slot -= o.c_[i];
        }
        low_ = lo;
        c_ = std::move(n);
        trim();
        return *this;
    }

    void trim() {
        size_t b = 0;
        while (b < c_.size() && c_[b] == 0) ++b;
        if (b == c_.size()) {
            c_.clear();
            low_ = 0;
            return;
        }
        while (c_.back() == 0) c_.pop_back();
        if (b) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(b));
            low_ += static_cast<int>(b);
        }
    }
};

// ---------------------------------------------------------------------------
// RationalQ
// ---------------------------------------------------------------------------

/// Quotient num/den of Laurent polynomials; equality is exact cross-multiplication.
struct RationalQ {
    LaurentPoly num;
    LaurentPoly den = 1;

    RationalQ() = default;
    RationalQ(LaurentPoly n) : num(std::move(n)) {}  // NOLINT implicit
    RationalQ(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::domain_error("RationalQ: zero denominator");
    }

    bool operator==(const RationalQ& o) const { return num * o.den == o.num * den; }
    bool operator!=(const RationalQ& o) const { return !(*this == o); }

    friend RationalQ operator+(const RationalQ& a, const RationalQ& b) {
        if (a.den == b.den) return {a.num + b.num, a.den};
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend RationalQ operator-(const RationalQ& a, const RationalQ& b) {
        if (a.den == b.den) return {a.num - b.num, a.den};
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend RationalQ operator*(const RationalQ& a, const RationalQ& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend RationalQ operator/(const RationalQ& a, const RationalQ& b) {
        return {a.num * b.den, a.den * b.num};
    }

    BigRational evaluate(const BigRational& x) const {
        BigRational d = den.evaluate(x);
        if (d == 0) throw std::domain_error("RationalQ: denominator vanishes");
        return num.evaluate(x) / d;
    }

    /// The quotient as a Laurent polynomial, if it is one.
    std::optional<LaurentPoly> as_laurent() const {
        try {
            return num.divexact(den);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    }
};

// ---------------------------------------------------------------------------
// TPoly
// ---------------------------------------------------------------------------

/// Polynomial Σ c_i(q) t^i; trailing zero coefficients are trimmed.
class TPoly {
public:
    TPoly() = default;
    TPoly(LaurentPoly c) : c_{std::move(c)} { trim(); }  // NOLINT implicit
    TPoly(long long c) : TPoly(LaurentPoly(c)) {}        // NOLINT implicit
    explicit TPoly(std::vector<LaurentPoly> cs) : c_(std::move(cs)) { trim(); }

    /// c·t^i
    static TPoly monomial(const LaurentPoly& c, int i) {
        if (i < 0) throw std::domain_error("TPoly: negative t exponent");
        std::vector<LaurentPoly> v(static_cast<size_t>(i) + 1);
        v.back() = c;
        return TPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree in t; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<LaurentPoly>& coeffs() const { return c_; }
    LaurentPoly coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : LaurentPoly{};
    }
    /// Lowest t exponent with a nonzero coefficient; -1 for zero.
    int low_degree() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const TPoly& o) const { return c_ == o.c_; }
    bool operator!=(const TPoly& o) const { return !(*this == o); }

    TPoly operator-() const {
        TPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend TPoly operator+(const TPoly& a, const TPoly& b) {
        std::vector<LaurentPoly> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return TPoly(std::move(v));
    }
    friend TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<LaurentPoly> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return TPoly(std::move(v));
    }
    TPoly& operator+=(const TPoly& o) { return *this = *this + o; }
    TPoly& operator-=(const TPoly& o) { return *this = *this - o; }
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

    TPoly pow(unsigned e) const {
        TPoly r = 1, x = *this;
        while (e) {
            if (e & 1u) r *= x;
            x *= x;
            e >>= 1u;
        }
        return r;
    }

    /// Multiply by t^k (k >= 0) or divide by t^-k, which must be exact.
    TPoly shifted(int k) const {
        if (is_zero()) return {};
        if (k >= 0) {
            std::vector<LaurentPoly> v(static_cast<size_t>(k));
            v.insert(v.end(), c_.begin(), c_.end());
            return TPoly(std::move(v));
        }
        size_t drop = static_cast<size_t>(-k);
        for (size_t i = 0; i < drop && i < c_.size(); ++i)
            if (!c_[i].is_zero()) throw std::domain_error("TPoly: division by t not exact");
        if (drop >= c_.size()) return {};
        return TPoly(std::vector<LaurentPoly>(c_.begin() + static_cast<std::ptrdiff_t>(drop), c_.end()));
    }

    /// f(t, q) -> f(q^a t, q^k)
    TPoly substitute(int t_scale, int q_power = 1) const {
        std::vector<LaurentPoly> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i)
            v[i] = c_[i].substitute_q(q_power).shifted(t_scale * static_cast<int>(i));
        return TPoly(std::move(v));
    }

    /// f(t) -> f(t^m) for m >= 1
    TPoly compose_power(int m) const {
        if (m < 1) throw std::domain_error("TPoly: compose_power needs m >= 1");
        if (is_zero()) return {};
        std::vector<LaurentPoly> v(static_cast<size_t>(degree() * m + 1));
        for (size_t i = 0; i < c_.size(); ++i) v[i * static_cast<size_t>(m)] = c_[i];
        return TPoly(std::move(v));
    }

    /// Evaluate at t = x, a Laurent polynomial in q.
    LaurentPoly evaluate_t(const LaurentPoly& x) const {
        LaurentPoly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Apply a map to every coefficient.
    template <class F>
    TPoly map_coeffs(F&& f) const {
        std::vector<LaurentPoly> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) v[i] = f(c_[i]);
        return TPoly(std::move(v));
    }

    /**
     * @brief Exact quotient by a divisor whose constant term is a unit ±q^k.
     * @throws std::domain_error if the division leaves a remainder.
     */
    TPoly divexact(const TPoly& d) const {
        if (d.is_zero()) throw std::domain_error("TPoly::divexact: zero divisor");
        if (is_zero()) return {};
        int qd = degree() - d.degree();
        if (qd < 0) throw std::domain_error("TPoly::divexact: not divisible");
        std::vector<LaurentPoly> quo = power_series_quotient(*this, d, qd);
        TPoly q(std::move(quo));
        if (q * d != *this) throw std::domain_error("TPoly::divexact: not divisible");
        return q;
    }

    /// First n+1 coefficients of num/den as a power series in t.
    static std::vector<LaurentPoly> power_series_quotient(const TPoly& num, const TPoly& den, int n) {
        if (den.is_zero() || !den.coeff(0).is_unit())
            throw std::domain_error("TSeries: denominator constant term is not a unit");
        const LaurentPoly d0 = den.coeff(0);
        const LaurentPoly inv = LaurentPoly::monomial(d0.coeff(d0.min_exp()), -d0.min_exp());
        std::vector<LaurentPoly> out(static_cast<size_t>(std::max(n + 1, 0)));
        for (int k = 0; k <= n; ++k) {
            LaurentPoly acc = num.coeff(k);
            for (int j = 1; j <= std::min(k, den.degree()); ++j)
                acc -= den.coeff(j) * out[static_cast<size_t>(k - j)];
            out[static_cast<size_t>(k)] = acc * inv;
        }
        return out;
    }

    /// Human form in increasing powers of t.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            os << "(" << c_[i].to_string() << ")";
            if (i == 1) os << "*t";
            if (i > 1) os << "*t^" << i;
            first = false;
        }
        return os.str();
    }

private:
    std::vector<LaurentPoly> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// ---------------------------------------------------------------------------
// TSeries
// ---------------------------------------------------------------------------

/// Rational function num/den in t; den must have a unit constant term.
struct TSeries {
    TPoly num;
    TPoly den = 1;

    TSeries() = default;
    TSeries(TPoly n) : num(std::move(n)) {}  // NOLINT implicit
    TSeries(TPoly n, TPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero() || !den.coeff(0).is_unit())
            throw std::domain_error("TSeries: denominator constant term is not a unit");
    }

    /// Equality as rational functions.
    bool operator==(const TSeries& o) const { return num * o.den == o.num * den; }
    bool operator!=(const TSeries& o) const { return !(*this == o); }

    friend TSeries operator+(const TSeries& a, const TSeries& b) {
        if (a.den == b.den) return {a.num + b.num, a.den};
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend TSeries operator-(const TSeries& a, const TSeries& b) {
        if (a.den == b.den) return {a.num - b.num, a.den};
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        return {a.num * b.num, a.den * b.den};
    }

    /// Coefficients of t^0..t^order.
    std::vector<LaurentPoly> expand(int order) const {
        return TPoly::power_series_quotient(num, den, order);
    }

    /// f(t, q) -> f(q^a t, q^k)
    TSeries substitute(int t_scale, int q_power = 1) const {
        return {num.substitute(t_scale, q_power), den.substitute(t_scale, q_power)};
    }

    /// Same series written over the given denominator (exact division check).
    TSeries over(const TPoly& target) const {
        TPoly factor = target.divexact(den);
        return {num * factor, target};
    }
};

// ---------------------------------------------------------------------------
// q-combinatorics
// ---------------------------------------------------------------------------

/// (q;q)_n = (1-q)(1-q^2)...(1-q^n)
inline LaurentPoly q_pochhammer(int n) {
    if (n < 0) throw std::domain_error("q_pochhammer: n < 0");
    LaurentPoly r = 1;
    for (int i = 1; i <= n; ++i) r *= LaurentPoly(1) - LaurentPoly::q(i);
    return r;
}

/// (q^-1;q^-1)_n
inline LaurentPoly q_pochhammer_inv(int n) { return q_pochhammer(n).substitute_q(-1); }

/// |GL_n(F_q)| = q^{n^2} (q^{-1};q^{-1})_n as a polynomial in q.
inline LaurentPoly gl_order(int n) { return q_pochhammer_inv(n).shifted(n * n); }

/// (t;q)_d = Π_{i<d} (1 - q^i t)
inline TPoly t_pochhammer(int d) {
    if (d < 0) throw std::domain_error("t_pochhammer: d < 0");
    TPoly r = 1;
    for (int i = 0; i < d; ++i) r *= TPoly(std::vector<LaurentPoly>{1, -LaurentPoly::q(i)});
    return r;
}

/// Gaussian binomial [d r]_q by exact division of Pochhammer symbols.
inline LaurentPoly q_binomial(int d, int r) {
    if (r < 0 || r > d) throw std::domain_error("q_binomial: need 0 <= r <= d");
    return q_pochhammer(d).divexact(q_pochhammer(r) * q_pochhammer(d - r));
}

/// Gaussian binomial at q^-1.
inline LaurentPoly q_binomial_inv(int d, int r) { return q_binomial(d, r).substitute_q(-1); }

/// n choose 2
inline int choose2(int n) { return n * (n - 1) / 2; }

// ---------------------------------------------------------------------------
// Cyclotomic evaluation
// ---------------------------------------------------------------------------

/// Integer coefficients of the cyclotomic polynomial Φ_r, lowest degree first.
inline std::vector<BigInt> cyclotomic(int r) {
    if (r < 1) throw std::domain_error("cyclotomic: r < 1");
    LaurentPoly p = LaurentPoly::q(r) - LaurentPoly(1);
    for (int s = 1; s < r; ++s)
        if (r % s == 0) {
            auto f = cyclotomic(s);
            LaurentPoly fp;
            for (size_t i = 0; i < f.size(); ++i) fp += LaurentPoly::monomial(f[i], static_cast<int>(i));
            p = p.divexact(fp);
        }
    std::vector<BigInt> out(static_cast<size_t>(p.max_exp()) + 1, BigInt(0));
    for (const auto& [e, c] : p.terms()) out[static_cast<size_t>(e)] = c;
    return out;
}

/// Cyclotomic polynomial Φ_r as a LaurentPoly.
inline LaurentPoly cyclotomic_poly(int r) {
    auto f = cyclotomic(r);
    LaurentPoly p;
    for (size_t i = 0; i < f.size(); ++i) p += LaurentPoly::monomial(f[i], static_cast<int>(i));
    return p;
}

/**
 * @brief Value of x at a primitive r-th root of unity, as the reduced
 * residue in Z[q]/Φ_r(q) (coefficients of 1, q, ..., q^{φ(r)-1}).
 */
inline std::vector<BigInt> evaluate_root_of_unity(const LaurentPoly& x, int r) {
    auto phi = cyclotomic(r);
    size_t deg = phi.size() - 1;
    std::vector<BigInt> acc(static_cast<size_t>(r), BigInt(0));
    for (const auto& [e, c] : x.terms()) acc[static_cast<size_t>(((e % r) + r) % r)] += c;
    // reduce mod the monic Φ_r
    for (size_t k = acc.size(); k-- > deg;) {
        BigInt f = acc[k];
        if (f == 0) continue;
        for (size_t j = 0; j <= deg; ++j) acc[k - deg + j] -= f * phi[j];
    }
    acc.resize(std::max<size_t>(deg, 1));
    if (deg == 0) acc.assign(1, BigInt(0));
    return acc;
}

/// Coefficientwise root-of-unity evaluation of a t-polynomial.
inline std::vector<std::vector<BigInt>> evaluate_root_of_unity(const TPoly& f, int r) {
    std::vector<std::vector<BigInt>> out;
    for (const auto& c : f.coeffs()) out.push_back(evaluate_root_of_unity(c, r));
    return out;
}

/// Exact evaluation of every coefficient at a rational q.
inline std::vector<BigRational> evaluate_q(const TPoly& f, const BigRational& x) {
    std::vector<BigRational> out;
    for (const auto& c : f.coeffs()) out.push_back(c.evaluate(x));
    return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::json bigint_to_json(const BigInt& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

inline BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    throw std::invalid_argument("expected an integer");
}

/// A polynomial as a list of [t_exp, q_exp, coeff] triples sorted by (t, q).
inline nlohmann::json to_json(const TPoly& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t i = 0; i < f.coeffs().size(); ++i)
        for (const auto& [e, c] : f.coeffs()[i].terms())
            arr.push_back({static_cast<int>(i), e, bigint_to_json(c)});
    return arr;
}

inline TPoly tpoly_from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    TPoly r;
    for (const auto& tr : arr) {
        if (!tr.is_array() || tr.size() != 3) throw std::invalid_argument("expected [t_exp, q_exp, coeff]");
        r += TPoly::monomial(LaurentPoly::monomial(bigint_from_json(tr[2]), tr[1].get<int>()), tr[0].get<int>());
    }
    return r;
}

inline nlohmann::json to_json(const TSeries& s) { return {{"num", to_json(s.num)}, {"den", to_json(s.den)}}; }

inline TSeries tseries_from_json(const nlohmann::json& j) {
    return {tpoly_from_json(j.at("num")), tpoly_from_json(j.at("den"))};
}

}  // namespace cuspquot
