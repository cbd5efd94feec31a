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

#ifndef COMPCOND_HESSENBERG_HPP
#define COMPCOND_HESSENBERG_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "compcond/labeled_matrix.hpp"
#include "compcond/polynomial.hpp"

namespace compcond {

/// Position inside the R block, zero-based.
struct Cell {
    std::size_t row = 0;
    std::size_t col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Unit lower Hessenberg companion matrix
///
///     [ 0 | I_m |    O        ]
///     [   R     | I_{n-m-1}   ]
///     [         |   0^T       ]
///
/// R is (n-m) x (m+1) and holds every coefficient entry; -c_{n-1-k} sits on
/// the k-th subdiagonal. Split R as [u H; -c_0 y^T] to get the blocks used by
/// the closed-form inverse.
class HessenbergCompanion {
public:
    /// `positions[i]` is the R-block cell of -c_i. Throws
    /// Error(InvalidStructure) if a cell is outside R, repeated, or on the
    /// wrong subdiagonal.
    static HessenbergCompanion from_r_positions(const MonicPolynomial& p, std::size_t m,
                                                std::span<const Cell> positions);

    const MonicPolynomial& polynomial() const noexcept { return p_; }
    std::size_t degree() const noexcept { return p_.degree(); }
    std::size_t m() const noexcept { return m_; }
    const LabeledMatrix& matrix() const noexcept { return matrix_; }

    std::size_t r_rows() const noexcept { return degree() - m_; }
    std::size_t r_cols() const noexcept { return m_ + 1; }
    /// R-block cell holding -c_i.
    const Cell& coef_cell(std::size_t i) const { return positions_.at(i); }
    const std::vector<Cell>& coef_cells() const noexcept { return positions_; }
    const Rational& r_value(std::size_t row, std::size_t col) const { return matrix_.value(m_ + row, col); }

    /// First column of R without its last entry (length n-m-1).
    std::vector<Rational> u() const;
    /// Last row of R without its first entry (length m).
    std::vector<Rational> y() const;
    /// Interior of R: rows 0..n-m-2, columns 1..m.
    std::vector<std::vector<Rational>> h() const;

private:
    HessenbergCompanion(MonicPolynomial p, std::size_t m, std::vector<Cell> positions, LabeledMatrix matrix);

    MonicPolynomial p_;
    std::size_t m_;
    std::vector<Cell> positions_;
    LabeledMatrix matrix_;
};

/// m = 0: -c_{n-1}, ..., -c_0 down the first column, ones on the superdiagonal.
HessenbergCompanion build_frobenius(const MonicPolynomial& p);

struct ValidationResult {
    bool ok = true;
    std::vector<std::string> diagnostics;
};

/// Shape-free part of the unit sparse definition: n-1 One entries, each
/// Coef(i) exactly once with value -c_i, Zero everywhere else, no Expr.
ValidationResult check_unit_sparse_entries(const LabeledMatrix& m, const MonicPolynomial& p);

/// Every HessenbergCompanion invariant: the entry census above plus the
/// block shape and the subdiagonal placement of each coefficient. Lists every
/// violated clause.
ValidationResult validate_unit_sparse(const LabeledMatrix& m, const MonicPolynomial& p);

/// Rebuilds the HessenbergCompanion view of a matrix that passes
/// validate_unit_sparse. Throws Error(InvalidStructure) otherwise.
HessenbergCompanion as_hessenberg(const LabeledMatrix& m, const MonicPolynomial& p);

/// Block-formula inverse from u, y, H. Throws Error(ZeroConstantTerm).
LabeledMatrix hessenberg_inverse(const HessenbergCompanion& c);

/// Exact rank of the R block.
std::size_t rank_r(const HessenbergCompanion& c);

}  // namespace compcond

#endif  // COMPCOND_HESSENBERG_HPP
