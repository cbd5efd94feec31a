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

#include "compcond/hessenberg.hpp"

#include <optional>

#include "compcond/error.hpp"

namespace compcond {

namespace {

std::string where(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

HessenbergCompanion::HessenbergCompanion(MonicPolynomial p, std::size_t m, std::vector<Cell> positions,
                                         LabeledMatrix matrix)
    : p_(std::move(p)), m_(m), positions_(std::move(positions)), matrix_(std::move(matrix)) {}

HessenbergCompanion HessenbergCompanion::from_r_positions(const MonicPolynomial& p, std::size_t m,
                                                          std::span<const Cell> positions) {
    const std::size_t n = p.degree();
    require_degree(p, 2);
    if (m >= n) throw Error(ErrorCode::InvalidStructure, "m must lie in [0, n-1]");
    if (positions.size() != n) {
        throw Error(ErrorCode::InvalidStructure, "need one R cell per coefficient");
    }
    const std::size_t rows = n - m;
    const std::size_t cols = m + 1;

    LabeledMatrix matrix(n);
    for (std::size_t i = 0; i + 1 < n; ++i) matrix.set_one(i, i + 1);

    std::vector<bool> taken(rows * cols, false);
    for (std::size_t k = 0; k < n; ++k) {
        const Cell& cell = positions[k];
        if (cell.row >= rows || cell.col >= cols) {
            throw Error(ErrorCode::InvalidStructure, "-c" + std::to_string(k) + " placed outside R");
        }
        if (taken[cell.row * cols + cell.col]) {
            throw Error(ErrorCode::InvalidStructure, "two coefficients share an R cell");
        }
        taken[cell.row * cols + cell.col] = true;
        const std::size_t i = m + cell.row;
        const std::size_t j = cell.col;
        if (i < j || i - j != n - 1 - k) {
            throw Error(ErrorCode::InvalidStructure,
                        "-c" + std::to_string(k) + " must lie on subdiagonal " + std::to_string(n - 1 - k));
        }
        matrix.set_coef(i, j, k, p);
    }
    return HessenbergCompanion(p, m, std::vector<Cell>(positions.begin(), positions.end()), std::move(matrix));
}

std::vector<Rational> HessenbergCompanion::u() const {
    std::vector<Rational> out;
    for (std::size_t r = 0; r + 1 < r_rows(); ++r) out.push_back(r_value(r, 0));
    return out;
}

std::vector<Rational> HessenbergCompanion::y() const {
    std::vector<Rational> out;
    for (std::size_t s = 1; s < r_cols(); ++s) out.push_back(r_value(r_rows() - 1, s));
    return out;
}

std::vector<std::vector<Rational>> HessenbergCompanion::h() const {
    std::vector<std::vector<Rational>> out(r_rows() - 1);
    for (std::size_t r = 0; r + 1 < r_rows(); ++r) {
        for (std::size_t s = 1; s < r_cols(); ++s) out[r].push_back(r_value(r, s));
    }
    return out;
}

HessenbergCompanion build_frobenius(const MonicPolynomial& p) {
    require_degree(p, 2);
    const std::size_t n = p.degree();
    std::vector<Cell> cells(n);
    for (std::size_t k = 0; k < n; ++k) cells[k] = Cell{n - 1 - k, 0};
    return HessenbergCompanion::from_r_positions(p, 0, cells);
}

ValidationResult check_unit_sparse_entries(const LabeledMatrix& m, const MonicPolynomial& p) {
    ValidationResult result;
    auto violate = [&result](std::string message) {
        result.ok = false;
        result.diagnostics.push_back(std::move(message));
    };
    const std::size_t n = p.degree();
    if (m.dim() != n) {
        violate("dimension " + std::to_string(m.dim()) + " differs from degree " + std::to_string(n));
        return result;
    }
    std::size_t ones = 0;
    std::vector<std::size_t> coef_count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Label& label = m.label(i, j);
            const Rational& value = m.value(i, j);
            switch (label.kind) {
                case EntryKind::Zero:
                    if (value != 0) violate("entry " + where(i, j) + " labeled zero holds " + to_string(value));
                    break;
                case EntryKind::One:
                    ++ones;
                    if (value != 1) violate("entry " + where(i, j) + " labeled one holds " + to_string(value));
                    break;
                case EntryKind::Coef:
                    if (label.coef >= n) {
                        violate("entry " + where(i, j) + " references c" + std::to_string(label.coef));
                        break;
                    }
                    ++coef_count[label.coef];
                    if (value != -p.coeff(label.coef)) {
                        violate("entry " + where(i, j) + " labeled -c" + std::to_string(label.coef) + " holds " +
                                to_string(value));
                    }
                    break;
                case EntryKind::Expr:
                    violate("entry " + where(i, j) + " is an expression (" + label.expr + "), not a coefficient");
                    break;
            }
        }
    }
    if (ones != n - 1) {
        violate("expected " + std::to_string(n - 1) + " unit entries, found " + std::to_string(ones));
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (coef_count[k] != 1) {
            violate("-c" + std::to_string(k) + " appears " + std::to_string(coef_count[k]) + " times");
        }
    }
    return result;
}

ValidationResult validate_unit_sparse(const LabeledMatrix& m, const MonicPolynomial& p) {
    ValidationResult result = check_unit_sparse_entries(m, p);
    const std::size_t n = p.degree();
    if (m.dim() != n) return result;
    auto violate = [&result](std::string message) {
        result.ok = false;
        result.diagnostics.push_back(std::move(message));
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const bool super = j == i + 1;
            const Label& label = m.label(i, j);
            if (super && label.kind != EntryKind::One) violate("superdiagonal entry " + where(i, j) + " is not one");
            if (!super && label.kind == EntryKind::One) violate("unit entry " + where(i, j) + " off the superdiagonal");
        }
    }

    std::optional<std::size_t> block_m;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m.label(i, j).is_coef(n - 1)) {
                if (i == j) {
                    block_m = i;
                } else {
                    violate("-c" + std::to_string(n - 1) + " at " + where(i, j) + " is off the main diagonal");
                }
            }
        }
    }

    std::size_t r_zeros = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Label& label = m.label(i, j);
            const bool in_r = block_m && i >= *block_m && j <= *block_m;
            if (in_r && label.kind == EntryKind::Zero) ++r_zeros;
            if (!label.is_coef() || label.coef >= n) continue;
            const std::size_t k = label.coef;
            if (i < j || i - j != n - 1 - k) {
                violate("-c" + std::to_string(k) + " at " + where(i, j) + " is not on subdiagonal " +
                        std::to_string(n - 1 - k));
            }
            if (block_m && !in_r) violate("-c" + std::to_string(k) + " at " + where(i, j) + " lies outside R");
        }
    }
    if (block_m) {
        const std::size_t mm = *block_m;
        if (r_zeros != mm * (n - 1 - mm)) {
            violate("R holds " + std::to_string(r_zeros) + " zeros, expected " + std::to_string(mm * (n - 1 - mm)));
        }
    } else {
        violate("no -c" + std::to_string(n - 1) + " on the main diagonal, block size m undetermined");
    }
    return result;
}

HessenbergCompanion as_hessenberg(const LabeledMatrix& m, const MonicPolynomial& p) {
    const ValidationResult check = validate_unit_sparse(m, p);
    if (!check.ok) {
        throw Error(ErrorCode::InvalidStructure, "not a unit sparse Hessenberg form: " + check.diagnostics.front());
    }
    const std::size_t n = p.degree();
    std::size_t block_m = 0;
    std::vector<Cell> cells(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m.label(i, j).is_coef(n - 1)) block_m = i;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Label& label = m.label(i, j);
            if (label.is_coef()) cells[label.coef] = Cell{i - block_m, j};
        }
    }
    return HessenbergCompanion::from_r_positions(p, block_m, cells);
}

LabeledMatrix hessenberg_inverse(const HessenbergCompanion& c) {
    const MonicPolynomial& p = c.polynomial();
    require_nonzero_constant(p);
    const std::size_t n = c.degree();
    const std::size_t m = c.m();
    const Rational inv_c0 = 1 / p.coeff(0);
    const auto u = c.u();
    const auto y = c.y();
    const auto h = c.h();

    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
    // [ y^T/c_0        0^T        -1/c_0 ]
    for (std::size_t s = 0; s < m; ++s) rows[0][s] = y[s] * inv_c0;
    rows[0][n - 1] = -inv_c0;
    // [ I_m            O           0     ]
    for (std::size_t s = 0; s < m; ++s) rows[1 + s][s] = 1;
    // [ -u y^T/c_0 - H I_{n-m-1}   u/c_0 ]
    for (std::size_t r = 0; r + 1 < n - m; ++r) {
        auto& row = rows[m + 1 + r];
        for (std::size_t s = 0; s < m; ++s) row[s] = -u[r] * y[s] * inv_c0 - h[r][s];
        row[m + r] = 1;
        row[n - 1] = u[r] * inv_c0;
    }
    LabeledMatrix result(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) result.set(i, j, rows[i][j], Label::expression("block inverse"));
    }
    return result;
}

std::size_t rank_r(const HessenbergCompanion& c) {
    std::vector<std::vector<Rational>> a(c.r_rows(), std::vector<Rational>(c.r_cols()));
    for (std::size_t r = 0; r < c.r_rows(); ++r) {
        for (std::size_t s = 0; s < c.r_cols(); ++s) a[r][s] = c.r_value(r, s);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < c.r_cols() && rank < a.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < a.size(); ++r) {
            if (a[r][col] == 0) continue;
            const Rational factor = a[r][col] / a[rank][col];
            for (std::size_t s = col; s < c.r_cols(); ++s) a[r][s] -= factor * a[rank][s];
        }
        ++rank;
    }
    return rank;
}

}  // namespace compcond
