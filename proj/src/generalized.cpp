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

#include "compcond/generalized.hpp"

#include <algorithm>

#include "compcond/error.hpp"
#include "compcond/fiedler.hpp"

namespace compcond {

void MSpec::validate(std::size_t n) const {
    if (ell < 3 || n < 5 || ell > n - 2) {
        throw Error(ErrorCode::BadEll, "ell = " + std::to_string(ell) + " outside {3, ..., n-2} for n = " +
                                           std::to_string(n));
    }
}

std::string MSpec::to_string() const { return "ell=" + std::to_string(ell) + ",a=" + compcond::to_string(a); }

LabeledMatrix build_M(const MonicPolynomial& p, const MSpec& spec) {
    const std::size_t n = p.degree();
    spec.validate(n);
    const std::size_t ell = spec.ell;
    const Rational& a = spec.a;
    const bool unperturbed = a == 0;

    LabeledMatrix m(n);
    for (std::size_t i = 0; i + 1 < n; ++i) m.set_one(i, i + 1);

    const std::size_t top = n - ell - 1;  // rows carrying -c_{n-1} .. -c_{ell+1}
    for (std::size_t r = 0; r < top; ++r) m.set_coef(r, 0, n - 1 - r, p);

    if (unperturbed) {
        m.set_coef(top, 0, ell, p);
        m.set_coef(top + 1, 0, ell - 1, p);
    } else {
        m.set(top, 0, Rational(-p.coeff(ell) + a), Label::expression("-c" + std::to_string(ell) + "+a"));
        m.set(top + 1, 0, Rational(-p.coeff(ell - 1) + a * p.coeff(n - 1)),
              Label::expression("-c" + std::to_string(ell - 1) + "+a*c" + std::to_string(n - 1)));
        m.set(top + 1, 1, Rational(-a), Label::expression("-a"));
    }

    for (std::size_t r = top + 2; r + 1 < n; ++r) m.set_coef(r, 0, ell - 2 - (r - top - 2), p);
    m.set_coef(n - 1, 0, 0, p);
    return m;
}

bool m_char_poly_check(const MonicPolynomial& p, const MSpec& spec) { return char_poly(build_M(p, spec)) == p; }

LabeledMatrix m_inverse(const MonicPolynomial& p, const MSpec& spec) {
    const std::size_t n = p.degree();
    spec.validate(n);
    require_nonzero_constant(p);
    const std::size_t ell = spec.ell;
    const Rational& a = spec.a;
    const Rational inv_c0 = 1 / p.coeff(0);
    const std::size_t top = n - ell - 1;

    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
    // (1/c_0) [ 0^T 0^T 0^T -1 ]
    rows[0][n - 1] = -inv_c0;
    // (1/c_0) [ c_0 I_{n-ell-1}  O  O  a-vector ]
    for (std::size_t r = 0; r < top; ++r) {
        rows[1 + r][r] = 1;
        rows[1 + r][n - 1] = -p.coeff(n - 1 - r) * inv_c0;
    }
    // (1/c_0) [ -c_0 W  c_0 I_2  O  (-c_ell + a, -c_{ell-1}) ]
    rows[top + 1][top] = 1;
    rows[top + 1][n - 1] = (a - p.coeff(ell)) * inv_c0;
    rows[top + 2][0] = a;
    rows[top + 2][top + 1] = 1;
    rows[top + 2][n - 1] = -p.coeff(ell - 1) * inv_c0;
    // (1/c_0) [ O  O  c_0 I_{ell-2}  b-vector ]
    for (std::size_t r = 0; r + 2 < ell; ++r) {
        rows[top + 3 + r][top + 2 + r] = 1;
        rows[top + 3 + r][n - 1] = -p.coeff(ell - 2 - r) * inv_c0;
    }

    LabeledMatrix result(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) result.set(i, j, rows[i][j], Label::expression("block inverse"));
    }
    return result;
}

namespace {

struct PrintedFactors {
    Rational first;
    Rational second;
};

PrintedFactors printed_factors(const MonicPolynomial& p, const MSpec& spec) {
    require_unit_constant(p);
    const std::size_t n = p.degree();
    spec.validate(n);
    const std::size_t ell = spec.ell;
    const Rational& a = spec.a;
    const Rational& c_ell = p.coeff(ell);
    const Rational& c_prev = p.coeff(ell - 1);
    const Rational v = static_cast<long>(n) - square(c_prev) - square(c_ell) + p.sum_squares(1, n - 1);
    const Rational shared = v + square(a) + square(Rational(a - c_ell));
    return {shared + square(Rational(a * p.coeff(n - 1) - c_prev)), shared + square(c_prev) + 1};
}

}  // namespace

Rational kappa_M_sq(const MonicPolynomial& p, const MSpec& spec, KappaMode mode) {
    if (mode == KappaMode::Printed) {
        const PrintedFactors f = printed_factors(p, spec);
        return f.first * f.second;
    }
    require_nonzero_constant(p);
    const LabeledMatrix m = build_M(p, spec);
    return frobenius_norm_sq(m) * frobenius_norm_sq(m_inverse(p, spec));
}

MConditionFactors m_condition_factors(const MonicPolynomial& p, const MSpec& spec) {
    require_nonzero_constant(p);
    MConditionFactors out;
    const LabeledMatrix m = build_M(p, spec);
    out.oracle = make_condition_report(frobenius_norm_sq(m), frobenius_norm_sq(m_inverse(p, spec)),
                                       ReportSource::Oracle);
    if (p.coeff(0) == 1) {
        const PrintedFactors f = printed_factors(p, spec);
        out.printed = make_condition_report(f.first, f.second, ReportSource::Printed);
        out.second_factor_offset = out.printed->inv_norm_sq - out.oracle.inv_norm_sq;
        out.first_factor_agrees = out.printed->norm_sq == out.oracle.norm_sq;
    }
    return out;
}

MonicPolynomial perturbation_polynomial(std::size_t n, std::size_t ell, const Rational& t) {
    MSpec{t, ell}.validate(n);
    std::vector<Rational> c(n, Rational(0));
    c[0] = 1;
    c[n - 1] += t;
    c[ell] += t;
    c[ell - 1] += t * t;
    return MonicPolynomial(std::move(c));
}

PerturbationReport perturbation_case(std::size_t n, std::size_t ell, const Rational& t) {
    const MonicPolynomial p = perturbation_polynomial(n, ell, t);
    const MSpec spec{t, ell};
    PerturbationReport out;
    out.t = t;
    out.kappa_f_sq = kappa_fiedler_sq(p, 1);
    out.kappa_m_oracle_sq = kappa_M_sq(p, spec, KappaMode::Oracle);
    out.kappa_m_printed_sq = kappa_M_sq(p, spec, KappaMode::Printed);
    out.ratio_sq_oracle = out.kappa_f_sq / out.kappa_m_oracle_sq;
    out.ratio_sq_printed = out.kappa_f_sq / out.kappa_m_printed_sq;
    if (t != 0) {
        const Rational scale = 2 / (t * t);
        out.scaled_oracle = to_double(Rational(out.ratio_sq_oracle * scale));
        out.scaled_printed = to_double(Rational(out.ratio_sq_printed * scale));
    }
    return out;
}

ImprovementReport improvement_condition(const MonicPolynomial& p, std::size_t ell) {
    require_unit_constant(p);
    const std::size_t n = p.degree();
    MSpec{Rational(0), ell}.validate(n);
    const MSpec spec{p.coeff(ell), ell};
    const Rational& c_ell = p.coeff(ell);
    const Rational& c_top = p.coeff(n - 1);
    const Rational& c_prev = p.coeff(ell - 1);

    ImprovementReport out;
    out.hypothesis = square(Rational(c_ell * c_top)) < 2 * c_prev * c_ell * c_top - 1;
    out.kappa_m_oracle_sq = kappa_M_sq(p, spec, KappaMode::Oracle);
    out.kappa_m_printed_sq = kappa_M_sq(p, spec, KappaMode::Printed);
    out.kappa_f_sq = kappa_fiedler_sq(p, 1);
    out.oracle_improves = out.kappa_m_oracle_sq < out.kappa_f_sq;
    out.divergence = out.hypothesis && !out.oracle_improves;
    return out;
}

std::vector<Rational> default_a_grid(const MonicPolynomial& p, std::size_t ell) {
    MSpec{Rational(0), ell}.validate(p.degree());
    const Rational& c_ell = p.coeff(ell);
    const Rational half = c_ell / 2;
    std::vector<Rational> grid;
    for (const Rational& a : {c_ell, Rational(0), Rational(1), Rational(-1), half, Rational(-half)}) {
        if (std::find(grid.begin(), grid.end(), a) == grid.end()) grid.push_back(a);
    }
    return grid;
}

}  // namespace compcond
