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

// Hand-entered matrix layouts used as golden data by several test files.
#ifndef COMPCOND_TESTS_FIXTURES_HPP
#define COMPCOND_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "compcond/labeled_matrix.hpp"
#include "compcond/polynomial.hpp"

namespace compcond::fixture {

/// Canonical a/b; gmpxx leaves two-argument constructions unreduced.
inline Rational frac(long a, long b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}

/// Builds a labeled matrix from cells "0", "1" or "-cK".
inline LabeledMatrix from_grid(const MonicPolynomial& p, const std::vector<std::vector<std::string>>& grid) {
    LabeledMatrix m(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            const std::string& cell = grid[i][j];
            if (cell == "1") {
                m.set_one(i, j);
            } else if (cell.rfind("-c", 0) == 0) {
                m.set_coef(i, j, std::stoul(cell.substr(2)), p);
            }
        }
    }
    return m;
}

// Three 4x4 unit sparse companion matrices: bottom-row Frobenius, a Fiedler
// form with step size one, and a non-Fiedler form.
inline LabeledMatrix frobenius_last_row(const MonicPolynomial& p) {
    return from_grid(p, {{"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}, {"-c0", "-c1", "-c2", "-c3"}});
}
inline LabeledMatrix fiedler_ruu(const MonicPolynomial& p) {
    return from_grid(p, {{"0", "1", "0", "0"}, {"0", "-c3", "1", "0"}, {"0", "-c2", "0", "1"}, {"-c0", "-c1", "0", "0"}});
}
inline LabeledMatrix non_fiedler_sparse(const MonicPolynomial& p) {
    return from_grid(p, {{"0", "1", "0", "0"}, {"-c2", "-c3", "1", "0"}, {"0", "0", "0", "1"}, {"-c0", "-c1", "0", "0"}});
}

// Frobenius-equivalent 4x4 layouts: first column, first row, last column.
inline std::vector<LabeledMatrix> frobenius_layouts(const MonicPolynomial& p) {
    return {
        from_grid(p, {{"-c3", "1", "0", "0"}, {"-c2", "0", "1", "0"}, {"-c1", "0", "0", "1"}, {"-c0", "0", "0", "0"}}),
        from_grid(p, {{"-c3", "-c2", "-c1", "-c0"}, {"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}}),
        from_grid(p, {{"0", "0", "0", "-c0"}, {"1", "0", "0", "-c1"}, {"0", "1", "0", "-c2"}, {"0", "0", "1", "-c3"}}),
    };
}

/// Non unit sparse 4x4 companion matrix with a free parameter a.
inline LabeledMatrix non_unit_sparse(const MonicPolynomial& p, const Rational& a) {
    LabeledMatrix m(4);
    m.set_coef(0, 0, 3, p);
    m.set(1, 0, Rational(-p.coeff(2) + a), Label::expression("-c2+a"));
    m.set(2, 0, Rational(-p.coeff(1) + a * p.coeff(3)), Label::expression("-c1+a*c3"));
    m.set(2, 1, Rational(-a), Label::expression("-a"));
    m.set_coef(3, 0, 0, p);
    for (std::size_t i = 0; i < 3; ++i) m.set_one(i, i + 1);
    return m;
}

inline MonicPolynomial degree9() { return make_polynomial({1, 2, 3, 3, 8, 5, 2, 6, 8}); }

}  // namespace compcond::fixture

#endif  // COMPCOND_TESTS_FIXTURES_HPP
