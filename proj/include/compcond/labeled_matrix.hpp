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

#ifndef COMPCOND_LABELED_MATRIX_HPP
#define COMPCOND_LABELED_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "compcond/polynomial.hpp"
#include "compcond/rational.hpp"

namespace compcond {

enum class EntryKind { Zero, One, Coef, Expr };

/// Structural meaning of a matrix entry. A Coef(i) entry holds -c_i of the
/// polynomial the matrix was built from.
struct Label {
    EntryKind kind = EntryKind::Zero;
    std::size_t coef = 0;
    std::string expr;

    static Label zero() { return {}; }
    static Label one() { return {EntryKind::One, 0, {}}; }
    static Label coefficient(std::size_t i) { return {EntryKind::Coef, i, {}}; }
    static Label expression(std::string description) { return {EntryKind::Expr, 0, std::move(description)}; }

    bool is_coef() const noexcept { return kind == EntryKind::Coef; }
    bool is_coef(std::size_t i) const noexcept { return kind == EntryKind::Coef && coef == i; }

    /// "0", "1", "-c3", or the expression text.
    std::string to_string() const;

    friend bool operator==(const Label&, const Label&) = default;
};

/// Dense square matrix of exact rationals with a structural label per entry.
/// Labels are set by constructors; arithmetic results carry Expr labels.
class LabeledMatrix {
public:
    LabeledMatrix() = default;
    /// n x n zero matrix (all labels Zero).
    explicit LabeledMatrix(std::size_t n);

    static LabeledMatrix identity(std::size_t n);
    /// Values only; every label is Expr.
    static LabeledMatrix from_values(const std::vector<std::vector<Rational>>& rows);

    std::size_t dim() const noexcept { return n_; }

    const Rational& value(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
    const Label& label(std::size_t i, std::size_t j) const { return labels_[i * n_ + j]; }

    void set(std::size_t i, std::size_t j, Rational value, Label label);
    void set_zero(std::size_t i, std::size_t j) { set(i, j, Rational(0), Label::zero()); }
    void set_one(std::size_t i, std::size_t j) { set(i, j, Rational(1), Label::one()); }
    /// Stores -c_k with label Coef(k).
    void set_coef(std::size_t i, std::size_t j, std::size_t k, const MonicPolynomial& p);

    /// A^T with labels carried along.
    LabeledMatrix transposed() const;
    /// P A P^T where row i of the result is row perm[i] of A:
    /// result(i, j) = A(perm[i], perm[j]).
    LabeledMatrix permuted(std::span<const std::size_t> perm) const;

    /// Values-only equality.
    bool same_values(const LabeledMatrix& other) const;
    bool is_identity() const;

    std::vector<std::vector<Rational>> value_rows() const;

    /// Grid of values, one row per line.
    std::string values_to_string() const;
    /// Grid of labels ("-c3", "1", "0", "{expr}").
    std::string labels_to_string() const;

private:
    std::size_t n_ = 0;
    std::vector<Rational> values_;
    std::vector<Label> labels_;
};

/// Exact product; labels are Expr.
LabeledMatrix operator*(const LabeledMatrix& a, const LabeledMatrix& b);

}  // namespace compcond

#endif  // COMPCOND_LABELED_MATRIX_HPP
