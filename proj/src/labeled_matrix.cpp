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

#include "compcond/labeled_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "compcond/error.hpp"

namespace compcond {

std::string Label::to_string() const {
    switch (kind) {
        case EntryKind::Zero: return "0";
        case EntryKind::One: return "1";
        case EntryKind::Coef: return "-c" + std::to_string(coef);
        case EntryKind::Expr: return "{" + expr + "}";
    }
    return "?";
}

LabeledMatrix::LabeledMatrix(std::size_t n) : n_(n), values_(n * n, Rational(0)), labels_(n * n) {}

LabeledMatrix LabeledMatrix::identity(std::size_t n) {
    LabeledMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set_one(i, i);
    return m;
}

LabeledMatrix LabeledMatrix::from_values(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t n = rows.size();
    LabeledMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw Error(ErrorCode::DimensionMismatch, "matrix rows must form a square grid");
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, rows[i][j], Label::expression("value"));
    }
    return m;
}

void LabeledMatrix::set(std::size_t i, std::size_t j, Rational value, Label label) {
    if (i >= n_ || j >= n_) throw Error(ErrorCode::IndexOutOfRange, "entry outside matrix");
    values_[i * n_ + j] = std::move(value);
    labels_[i * n_ + j] = std::move(label);
}

void LabeledMatrix::set_coef(std::size_t i, std::size_t j, std::size_t k, const MonicPolynomial& p) {
    set(i, j, Rational(-p.coeff(k)), Label::coefficient(k));
}

LabeledMatrix LabeledMatrix::transposed() const {
    LabeledMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) t.set(j, i, value(i, j), label(i, j));
    }
    return t;
}

LabeledMatrix LabeledMatrix::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != n_) throw Error(ErrorCode::InvalidPermutation, "permutation length differs from dimension");
    std::vector<bool> seen(n_, false);
    for (std::size_t v : perm) {
        if (v >= n_ || seen[v]) throw Error(ErrorCode::InvalidPermutation, "not a permutation");
        seen[v] = true;
    }
    LabeledMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) r.set(i, j, value(perm[i], perm[j]), label(perm[i], perm[j]));
    }
    return r;
}

bool LabeledMatrix::same_values(const LabeledMatrix& other) const {
    return n_ == other.n_ && values_ == other.values_;
}

bool LabeledMatrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (value(i, j) != (i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

std::vector<std::vector<Rational>> LabeledMatrix::value_rows() const {
    std::vector<std::vector<Rational>> rows(n_);
    for (std::size_t i = 0; i < n_; ++i) rows[i].assign(values_.begin() + i * n_, values_.begin() + (i + 1) * n_);
    return rows;
}

namespace {

template <typename Cell>
std::string grid(std::size_t n, Cell cell) {
    std::vector<std::string> text(n * n);
    std::size_t width = 1;
    for (std::size_t k = 0; k < n * n; ++k) {
        text[k] = cell(k / n, k % n);
        width = std::max(width, text[k].size());
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < n; ++i) {
        out << "[";
        for (std::size_t j = 0; j < n; ++j) {
            const std::string& s = text[i * n + j];
            out << (j ? " " : "") << std::string(width - s.size(), ' ') << s;
        }
        out << "]\n";
    }
    return out.str();
}

}  // namespace

std::string LabeledMatrix::values_to_string() const {
    return grid(n_, [this](std::size_t i, std::size_t j) { return compcond::to_string(value(i, j)); });
}

std::string LabeledMatrix::labels_to_string() const {
    return grid(n_, [this](std::size_t i, std::size_t j) { return label(i, j).to_string(); });
}

LabeledMatrix operator*(const LabeledMatrix& a, const LabeledMatrix& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "product of differently sized matrices");
    const std::size_t n = a.dim();
    LabeledMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational sum(0);
            for (std::size_t k = 0; k < n; ++k) {
                if (a.value(i, k) != 0 && b.value(k, j) != 0) sum += a.value(i, k) * b.value(k, j);
            }
            c.set(i, j, std::move(sum), Label::expression("product"));
        }
    }
    return c;
}

}  // namespace compcond
