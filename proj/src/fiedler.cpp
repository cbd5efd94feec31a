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

#include "compcond/fiedler.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "compcond/error.hpp"

namespace compcond {

FiedlerPermutation::FiedlerPermutation(std::vector<std::size_t> sigma) : sigma_(std::move(sigma)) {
    std::vector<bool> seen(sigma_.size(), false);
    for (std::size_t v : sigma_) {
        if (v >= sigma_.size() || seen[v]) {
            throw Error(ErrorCode::InvalidPermutation, "sigma must be a permutation of {0..n-1}");
        }
        seen[v] = true;
    }
}

std::string FiedlerPermutation::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < sigma_.size(); ++i) out += (i ? "," : "") + std::to_string(sigma_[i]);
    return out + ")";
}

LabeledMatrix fiedler_factor(std::size_t k, const MonicPolynomial& p) {
    const std::size_t n = p.degree();
    if (k >= n) {
        throw Error(ErrorCode::IndexOutOfRange, "Fiedler factor index " + std::to_string(k) + " outside [0, n-1]");
    }
    LabeledMatrix f = LabeledMatrix::identity(n);
    if (k == 0) {
        f.set_coef(n - 1, n - 1, 0, p);
        return f;
    }
    const std::size_t top = n - k - 1;
    f.set_coef(top, top, k, p);
    f.set_one(top, top + 1);
    f.set_one(top + 1, top);
    f.set_zero(top + 1, top + 1);
    return f;
}

namespace {

std::vector<long> odd_primes(std::size_t count) {
    std::vector<long> primes;
    for (long candidate = 3; primes.size() < count; candidate += 2) {
        bool prime = true;
        for (long d = 3; d * d <= candidate && prime; d += 2) prime = candidate % d != 0;
        if (prime) primes.push_back(candidate);
    }
    return primes;
}

LabeledMatrix multiply_factors(const FiedlerPermutation& sigma, const MonicPolynomial& p) {
    LabeledMatrix product = LabeledMatrix::identity(p.degree());
    for (std::size_t k : sigma.sigma()) product = product * fiedler_factor(k, p);
    return product;
}

}  // namespace

LabeledMatrix fiedler_product(const FiedlerPermutation& sigma, const MonicPolynomial& p) {
    const std::size_t n = p.degree();
    require_degree(p, 2);
    if (sigma.size() != n) throw Error(ErrorCode::InvalidPermutation, "sigma length differs from degree");

    const auto primes = odd_primes(n);
    const MonicPolynomial generic(std::vector<Rational>(primes.begin(), primes.end()));
    std::map<Rational, std::size_t> coef_of_value;
    for (std::size_t i = 0; i < n; ++i) coef_of_value.emplace(Rational(-primes[i]), i);

    const LabeledMatrix symbolic = multiply_factors(sigma, generic);
    const LabeledMatrix actual = multiply_factors(sigma, p);

    LabeledMatrix result(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = symbolic.value(i, j);
            Label label;
            if (v == 0) {
                label = Label::zero();
            } else if (v == 1) {
                label = Label::one();
            } else if (auto it = coef_of_value.find(v); it != coef_of_value.end()) {
                label = Label::coefficient(it->second);
            } else {
                throw std::logic_error("Fiedler product entry is not 0, 1 or a single coefficient");
            }
            result.set(i, j, actual.value(i, j), std::move(label));
        }
    }
    return result;
}

std::size_t LatticePath::rights() const {
    return static_cast<std::size_t>(std::count(moves.begin(), moves.end(), Move::Right));
}

std::size_t LatticePath::step_size() const {
    if (moves.empty()) return 0;
    std::size_t run = 1;
    while (run < moves.size() && moves[run] == moves[0]) ++run;
    return run;
}

std::string LatticePath::to_string() const {
    std::string out;
    for (Move mv : moves) out += mv == Move::Right ? 'R' : 'U';
    return out;
}

LatticePath LatticePath::parse(std::string_view text) {
    LatticePath path;
    for (char ch : text) {
        if (ch == 'R' || ch == 'r') {
            path.moves.push_back(Move::Right);
        } else if (ch == 'U' || ch == 'u') {
            path.moves.push_back(Move::Up);
        } else if (ch != ',' && ch != ' ') {
            throw Error(ErrorCode::ParseError, "lattice path moves are R or U");
        }
    }
    return path;
}

std::vector<LatticePath> all_lattice_paths(std::size_t n) {
    std::vector<LatticePath> paths;
    if (n < 2) return paths;
    const std::size_t len = n - 1;
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
        LatticePath path;
        for (std::size_t b = 0; b < len; ++b) {
            path.moves.push_back(((mask >> (len - 1 - b)) & 1U) ? Move::Up : Move::Right);
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

LatticePath canonical_path(std::size_t n, std::size_t t) {
    if (n < 2 || t < 1 || t > n - 1) throw Error(ErrorCode::IndexOutOfRange, "step size outside [1, n-1]");
    LatticePath path;
    path.moves.assign(t, Move::Right);
    path.moves.resize(n - 1, Move::Up);
    return path;
}

HessenbergCompanion lattice_to_hessenberg(const LatticePath& path, const MonicPolynomial& p) {
    const std::size_t n = p.degree();
    require_degree(p, 2);
    if (path.moves.size() != n - 1) {
        throw Error(ErrorCode::InvalidStructure, "a lattice path for degree n has n-1 moves");
    }
    const std::size_t m = path.rights();
    std::vector<Cell> cells;
    Cell at{n - m - 1, 0};
    cells.push_back(at);
    for (Move mv : path.moves) {
        if (mv == Move::Right) {
            ++at.col;
        } else {
            --at.row;
        }
        cells.push_back(at);
    }
    return HessenbergCompanion::from_r_positions(p, m, cells);
}

bool is_fiedler_hessenberg(const HessenbergCompanion& c) {
    const auto& cells = c.coef_cells();
    for (std::size_t k = 0; k + 1 < cells.size(); ++k) {
        const Cell& from = cells[k];
        const Cell& to = cells[k + 1];
        const bool above = to.col == from.col && to.row + 1 == from.row;
        const bool right = to.row == from.row && to.col == from.col + 1;
        if (!above && !right) return false;
    }
    return true;
}

std::size_t initial_step_size(const LabeledMatrix& m) {
    const std::size_t n = m.dim();
    std::optional<Cell> c0;
    std::optional<Cell> c1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m.label(i, j).is_coef(0)) c0 = Cell{i, j};
            if (m.label(i, j).is_coef(1)) c1 = Cell{i, j};
        }
    }
    if (!c0 || !c1) throw Error(ErrorCode::NotFiedler, "matrix lacks a -c0 or -c1 entry");
    auto count_line = [&](bool row_line, std::size_t index) {
        std::size_t count = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const Label& label = row_line ? m.label(index, k) : m.label(k, index);
            if (label.is_coef() && label.coef != 0) ++count;
        }
        return count;
    };
    if (c0->row == c1->row) return count_line(true, c0->row);
    if (c0->col == c1->col) return count_line(false, c0->col);
    throw Error(ErrorCode::NotFiedler, "-c0 and -c1 share no row or column");
}

Rational unit_sparse_norm_sq(const MonicPolynomial& p) {
    return Rational(static_cast<long>(p.degree() - 1)) + p.sum_squares(0, p.degree() - 1);
}

Rational fiedler_inverse_norm_sq(const MonicPolynomial& p, std::size_t t) {
    const std::size_t n = p.degree();
    require_nonzero_constant(p);
    if (t < 1 || t > n - 1) throw Error(ErrorCode::IndexOutOfRange, "step size outside [1, n-1]");
    const Rational c0_sq = square(p.coeff(0));
    Rational head = 1 + p.sum_squares(1, t);
    return Rational(static_cast<long>(n - 1)) + head / c0_sq + p.sum_squares(t + 1, n - 1);
}

Rational kappa_fiedler_sq(const MonicPolynomial& p, std::size_t t) {
    return unit_sparse_norm_sq(p) * fiedler_inverse_norm_sq(p, t);
}

std::string_view regime_name(Regime regime) {
    switch (regime) {
        case Regime::Below: return "|c0|<1";
        case Regime::Equal: return "|c0|=1";
        case Regime::Above: return "|c0|>1";
    }
    return "?";
}

KappaOrdering kappa_ordering(const MonicPolynomial& p) {
    require_nonzero_constant(p);
    KappaOrdering ordering;
    const std::size_t n = p.degree();
    for (std::size_t t = 1; t <= n - 1; ++t) ordering.kappa_sq.push_back(kappa_fiedler_sq(p, t));

    const Rational mag = abs_value(p.coeff(0));
    ordering.regime = mag < 1 ? Regime::Below : (mag == 1 ? Regime::Equal : Regime::Above);
    bool holds = true;
    for (std::size_t i = 1; i < ordering.kappa_sq.size(); ++i) {
        const Rational& prev = ordering.kappa_sq[i - 1];
        const Rational& next = ordering.kappa_sq[i];
        switch (ordering.regime) {
            case Regime::Below: holds = holds && prev <= next; break;
            case Regime::Equal: holds = holds && prev == next; break;
            case Regime::Above: holds = holds && prev >= next; break;
        }
    }
    ordering.direction_holds = holds;
    return ordering;
}

RatioBoundReport ratio_bound_check(const HessenbergCompanion& c) {
    const MonicPolynomial& p = c.polynomial();
    require_nonzero_constant(p);
    auto is_zero = [](const std::vector<Rational>& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
    };
    if (!is_zero(c.u()) && !is_zero(c.y())) {
        throw Error(ErrorCode::HypothesisNotMet, "both u and y are nonzero");
    }
    RatioBoundReport report;
    report.kappa_c_sq = condition_report(c.matrix()).kappa_sq;
    for (std::size_t t = 1; t < p.degree(); ++t) {
        RatioBoundEntry entry;
        entry.step = t;
        entry.kappa_f_sq = kappa_fiedler_sq(p, t);
        entry.ratio_sq = report.kappa_c_sq / entry.kappa_f_sq;
        entry.applicable = entry.kappa_f_sq <= report.kappa_c_sq;
        if (entry.applicable) {
            ++report.applicable_count;
            entry.holds = report.kappa_c_sq <= entry.kappa_f_sq * entry.kappa_f_sq;
            report.all_hold = report.all_hold && entry.holds;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace compcond
