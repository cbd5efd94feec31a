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

#include "compcond/random.hpp"

#include "compcond/error.hpp"

namespace compcond {

long Rng::uniform(long lo, long hi) {
    if (hi < lo) throw Error(ErrorCode::IndexOutOfRange, "empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw = next();
    while (draw >= limit) draw = next();
    return lo + static_cast<long>(draw % span);
}

Rational Rng::rational(long max_num, long max_den) {
    Rational q(uniform(-max_num, max_num), uniform(1, max_den));
    q.canonicalize();
    return q;
}

std::vector<std::size_t> Rng::permutation(std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[index(i)]);
    return perm;
}

MonicPolynomial random_polynomial(Rng& rng, std::size_t n, ConstantTerm constant) {
    std::vector<Rational> c(n);
    for (std::size_t i = 1; i < n; ++i) c[i] = rng.rational(9, 4);
    switch (constant) {
        case ConstantTerm::NonZero:
            do {
                c[0] = rng.rational(9, 4);
            } while (c[0] == 0);
            break;
        case ConstantTerm::Unit: c[0] = 1; break;
        case ConstantTerm::SignedUnit: c[0] = rng.coin() ? 1 : -1; break;
        case ConstantTerm::BelowOne: {
            // 0 < |c_0| < 1
            const long den = rng.uniform(2, 9);
            c[0] = Rational(rng.uniform(1, den - 1), den);
            if (rng.coin()) c[0] = -c[0];
            c[0].canonicalize();
            break;
        }
        case ConstantTerm::AboveOne: {
            const long den = rng.uniform(1, 4);
            c[0] = Rational(rng.uniform(den + 1, 9 * den), den);
            if (rng.coin()) c[0] = -c[0];
            c[0].canonicalize();
            break;
        }
    }
    return MonicPolynomial(std::move(c));
}

HessenbergCompanion random_hessenberg(Rng& rng, const MonicPolynomial& p, ZeroBlock zero) {
    const std::size_t n = p.degree();
    require_degree(p, 2);
    // Zero y needs at least two rows in R; zero u needs at least two columns.
    std::size_t m = 0;
    switch (zero) {
        case ZeroBlock::None: m = rng.index(n); break;
        case ZeroBlock::Y: m = rng.index(n - 1); break;
        case ZeroBlock::U: m = 1 + rng.index(n - 1); break;
    }
    const std::size_t rows = n - m;
    const std::size_t last = rows - 1;

    std::vector<Cell> cells(n);
    cells[0] = Cell{last, 0};
    for (std::size_t k = 1; k < n; ++k) {
        // R cell (row, col) sits on subdiagonal m + row - col of the matrix.
        const long offset = static_cast<long>(n - 1 - k) - static_cast<long>(m);
        std::vector<Cell> options;
        for (std::size_t col = 0; col <= m; ++col) {
            const long row = static_cast<long>(col) + offset;
            if (row < 0 || row > static_cast<long>(last)) continue;
            const Cell cell{static_cast<std::size_t>(row), col};
            if (zero == ZeroBlock::Y && cell.row == last && cell.col >= 1) continue;
            if (zero == ZeroBlock::U && cell.col == 0 && cell.row < last) continue;
            options.push_back(cell);
        }
        cells[k] = options.at(rng.index(options.size()));
    }
    return HessenbergCompanion::from_r_positions(p, m, cells);
}

}  // namespace compcond
