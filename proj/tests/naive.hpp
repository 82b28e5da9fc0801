/**
 * @file naive.hpp
 * @brief Small independent reference computations used only by the tests.
 *
 * These deliberately avoid the library's linear algebra and series code.
 */
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cuspquot/qalgebra.hpp"

namespace naive {

/// Number of r-dimensional subspaces of F_2^n: independent ordered r-tuples over those of F_2^r.
inline std::uint64_t count_subspaces_f2(int n, int r) {
    auto independent_tuples = [](int dim, int k) {
        std::uint64_t count = 0;
        std::vector<std::uint32_t> v(static_cast<size_t>(k), 0);
        const std::uint32_t N = 1u << dim;
        std::vector<std::uint32_t> idx(static_cast<size_t>(k), 0);
        while (true) {
            bool ok = true;
            for (std::uint32_t mask = 1; mask < (1u << k) && ok; ++mask) {
                std::uint32_t s = 0;
                for (int i = 0; i < k; ++i)
                    if (mask >> i & 1u) s ^= idx[static_cast<size_t>(i)];
                if (s == 0) ok = false;
            }
            if (ok) ++count;
            int i = 0;
            for (; i < k; ++i) {
                if (++idx[static_cast<size_t>(i)] < N) break;
                idx[static_cast<size_t>(i)] = 0;
            }
            if (i == k) return count;
        }
    };
    return independent_tuples(n, r) / independent_tuples(r, r);
}

/// 2x2 matrices over F_p as 4-arrays, row-major.
using M2 = std::array<unsigned, 4>;

inline M2 mul(const M2& a, const M2& b, unsigned p) {
    return {(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p,
            (a[2] * b[0] + a[3] * b[2]) % p, (a[2] * b[1] + a[3] * b[3]) % p};
}

/// All pairs (A, B) of 2x2 matrices with AB = BA and A^2 = B^3; nilpotent: also A^2 = B^2 = 0.
inline std::uint64_t count_pairs_2x2(unsigned p, bool nilpotent) {
    std::uint64_t count = 0;
    const unsigned total = p * p * p * p;
    auto decode = [&](unsigned code) {
        M2 m{};
        for (auto& x : m) {
            x = code % p;
            code /= p;
        }
        return m;
    };
    const M2 zero{0, 0, 0, 0};
    for (unsigned ia = 0; ia < total; ++ia)
        for (unsigned ib = 0; ib < total; ++ib) {
            M2 A = decode(ia), B = decode(ib);
            if (mul(A, B, p) != mul(B, A, p)) continue;
            M2 A2 = mul(A, A, p), B2 = mul(B, B, p);
            if (A2 != mul(B2, B, p)) continue;
            if (nilpotent && (A2 != zero || B2 != zero)) continue;
            ++count;
        }
    return count;
}

/// Strictly upper triangular pairs over F_2 with XY = YX and X^2 = Y^3, matrices as bit rows.
inline std::uint64_t count_staircase_f2(int d) {
    std::vector<int> pos;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) pos.push_back(i * d + j);
    const std::uint32_t n = static_cast<std::uint32_t>(pos.size());
    auto build = [&](std::uint32_t bits) {
        std::vector<int> m(static_cast<size_t>(d * d), 0);
        for (std::uint32_t k = 0; k < n; ++k)
            if (bits >> k & 1u) m[static_cast<size_t>(pos[k])] = 1;
        return m;
    };
    auto mul = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(static_cast<size_t>(d * d), 0);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k)
                for (int j = 0; j < d; ++j) c[static_cast<size_t>(i * d + j)] ^= a[static_cast<size_t>(i * d + k)] & b[static_cast<size_t>(k * d + j)];
        return c;
    };
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < (1u << n); ++x)
        for (std::uint32_t y = 0; y < (1u << n); ++y) {
            auto X = build(x), Y = build(y);
            if (mul(X, Y) != mul(Y, X)) continue;
            if (mul(X, X) != mul(mul(Y, Y), Y)) continue;
            ++count;
        }
    return count;
}

}  // namespace naive
