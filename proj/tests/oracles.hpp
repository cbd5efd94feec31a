/*
   Copyright 2026 The compcond Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Test-only reference computations. Nothing here shares code paths with the
// library routines they check.
#ifndef COMPCOND_TESTS_ORACLES_HPP
#define COMPCOND_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "compcond/labeled_matrix.hpp"
#include "compcond/rational.hpp"

namespace compcond::oracle {

using Poly = std::vector<Rational>;  // ascending powers of x

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// det(xI - M) by Laplace expansion along successive rows, memoized on the
/// set of columns still available. Returns all n+1 coefficients.
inline Poly cofactor_char_poly(const LabeledMatrix& m) {
    const std::size_t n = m.dim();
    auto entry = [&](std::size_t i, std::size_t j) -> Poly {
        Poly e{Rational(-m.value(i, j))};
        if (i == j) e.push_back(Rational(1));
        return e;
    };
    std::map<std::uint32_t, Poly> memo;
    auto det = [&](auto&& self, std::size_t row, std::uint32_t cols) -> Poly {
        if (row == n) return Poly{Rational(1)};
        if (auto it = memo.find(cols); it != memo.end()) return it->second;
        Poly total{Rational(0)};
        int sign = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(cols & (1U << j))) continue;
            const Poly e = entry(row, j);
            const bool zero = std::all_of(e.begin(), e.end(), [](const Rational& q) { return q == 0; });
            if (!zero) {
                Poly term = poly_mul(e, self(self, row + 1, cols & ~(1U << j)));
                if (sign < 0) {
                    for (auto& q : term) q = -q;
                }
                total = poly_add(total, term);
            }
            sign = -sign;
        }
        memo.emplace(cols, total);
        return total;
    };
    Poly p = det(det, 0, (n >= 32) ? 0xFFFFFFFFU : ((1U << n) - 1));
    p.resize(n + 1, Rational(0));
    return p;
}

/// Coefficients c_0..c_{n-1} of the cofactor characteristic polynomial.
inline std::vector<Rational> cofactor_coeffs(const LabeledMatrix& m) {
    Poly p = cofactor_char_poly(m);
    p.pop_back();
    return p;
}

inline bool product_is_identity(const LabeledMatrix& a, const LabeledMatrix& b) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational sum(0);
            for (std::size_t k = 0; k < n; ++k) sum += a.value(i, k) * b.value(k, j);
            if (sum != (i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

/// Tries every permutation, with and without transposing b.
inline bool brute_force_equivalent(const LabeledMatrix& a, const LabeledMatrix& b) {
    const std::size_t n = a.dim();
    if (b.dim() != n) return false;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool same = true;
        bool same_t = true;
        for (std::size_t i = 0; i < n && (same || same_t); ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                same = same && a.value(i, j) == b.value(perm[i], perm[j]);
                same_t = same_t && a.value(i, j) == b.value(perm[j], perm[i]);
            }
        }
        if (same || same_t) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Rational entry_square_sum(const LabeledMatrix& m) {
    Rational total(0);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) total += m.value(i, j) * m.value(i, j);
    }
    return total;
}

}  // namespace compcond::oracle

#endif  // COMPCOND_TESTS_ORACLES_HPP
