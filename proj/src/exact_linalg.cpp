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

#include "compcond/exact_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "compcond/error.hpp"

namespace compcond {

MonicPolynomial char_poly(const LabeledMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of an empty matrix");

    using Grid = std::vector<Rational>;
    auto at = [n](Grid& g, std::size_t i, std::size_t j) -> Rational& { return g[i * n + j]; };

    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    Grid prev(n * n, Rational(0));
    Grid cur(n * n, Rational(0));
    Grid a_times(n * n, Rational(0));
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational sum(0);
                for (std::size_t l = 0; l < n; ++l) {
                    if (m.value(i, l) != 0 && at(prev, l, j) != 0) sum += m.value(i, l) * at(prev, l, j);
                }
                at(cur, i, j) = sum;
            }
            at(cur, i, i) += coeffs[n - k + 1];
        }
        Rational trace(0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                if (m.value(i, l) != 0 && at(cur, l, i) != 0) trace += m.value(i, l) * at(cur, l, i);
            }
        }
        coeffs[n - k] = -trace / static_cast<long>(k);
        std::swap(prev, cur);
    }
    coeffs.pop_back();
    return MonicPolynomial(std::move(coeffs));
}

LabeledMatrix invert(const LabeledMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<std::vector<Rational>> a = m.value_rows();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw Error(ErrorCode::Singular, "matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);

        const Rational scale = 1 / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                if (a[col][j] != 0) a[r][j] -= factor * a[col][j];
                if (inv[col][j] != 0) inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    LabeledMatrix result(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) result.set(i, j, inv[i][j], Label::expression("inverse"));
    }
    return result;
}

Rational frobenius_norm_sq(const LabeledMatrix& m) {
    Rational total(0);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) total += m.value(i, j) * m.value(i, j);
    }
    return total;
}

namespace {

// Permutation-invariant fingerprint of index i: its diagonal entry plus the
// sorted multisets of its row and column.
struct IndexSignature {
    Rational diagonal;
    std::vector<Rational> row;
    std::vector<Rational> col;

    friend bool operator==(const IndexSignature&, const IndexSignature&) = default;
};

std::vector<IndexSignature> signatures(const LabeledMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<IndexSignature> sigs(n);
    for (std::size_t i = 0; i < n; ++i) {
        sigs[i].diagonal = m.value(i, i);
        for (std::size_t j = 0; j < n; ++j) {
            sigs[i].row.push_back(m.value(i, j));
            sigs[i].col.push_back(m.value(j, i));
        }
        std::sort(sigs[i].row.begin(), sigs[i].row.end());
        std::sort(sigs[i].col.begin(), sigs[i].col.end());
    }
    return sigs;
}

class SimilaritySearch {
public:
    SimilaritySearch(const LabeledMatrix& a, const LabeledMatrix& b)
        : a_(a), b_(b), n_(a.dim()), image_(n_, 0), used_(n_, false) {
        const auto sig_a = signatures(a);
        const auto sig_b = signatures(b);
        candidates_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t r = 0; r < n_; ++r) {
                if (sig_a[i] == sig_b[r]) candidates_[i].push_back(r);
            }
        }
    }

    bool run() { return assign(0); }

private:
    // a(i, j) == b(image[i], image[j]) for every assigned pair.
    bool assign(std::size_t i) {
        if (i == n_) return true;
        for (std::size_t r : candidates_[i]) {
            if (used_[r]) continue;
            bool consistent = true;
            for (std::size_t k = 0; k < i && consistent; ++k) {
                consistent = a_.value(i, k) == b_.value(r, image_[k]) && a_.value(k, i) == b_.value(image_[k], r);
            }
            if (!consistent) continue;
            image_[i] = r;
            used_[r] = true;
            if (assign(i + 1)) return true;
            used_[r] = false;
        }
        return false;
    }

    const LabeledMatrix& a_;
    const LabeledMatrix& b_;
    std::size_t n_;
    std::vector<std::vector<std::size_t>> candidates_;
    std::vector<std::size_t> image_;
    std::vector<bool> used_;
};

}  // namespace

bool equivalent(const LabeledMatrix& a, const LabeledMatrix& b, std::size_t cap) {
    if (a.dim() != b.dim()) return false;
    if (a.dim() > cap) {
        throw Error(ErrorCode::DimensionTooLarge,
                    "equivalence search capped at n <= " + std::to_string(cap) + ", got " + std::to_string(a.dim()));
    }
    if (SimilaritySearch(a, b).run()) return true;
    const LabeledMatrix bt = b.transposed();
    return SimilaritySearch(a, bt).run();
}

std::string_view source_name(ReportSource source) {
    switch (source) {
        case ReportSource::ClosedForm: return "closed-form";
        case ReportSource::Oracle: return "oracle";
        case ReportSource::Printed: return "printed";
    }
    return "unknown";
}

ConditionReport make_condition_report(Rational norm_sq, Rational inv_norm_sq, ReportSource source) {
    ConditionReport report;
    report.norm_sq = std::move(norm_sq);
    report.inv_norm_sq = std::move(inv_norm_sq);
    report.kappa_sq = report.norm_sq * report.inv_norm_sq;
    report.kappa_float = std::sqrt(to_double(report.kappa_sq));
    report.source = source;
    return report;
}

ConditionReport condition_report(const LabeledMatrix& m) {
    const LabeledMatrix inverse = invert(m);
    return make_condition_report(frobenius_norm_sq(m), frobenius_norm_sq(inverse), ReportSource::Oracle);
}

}  // namespace compcond
