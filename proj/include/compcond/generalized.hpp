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

#ifndef COMPCOND_GENERALIZED_HPP
#define COMPCOND_GENERALIZED_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "compcond/exact_linalg.hpp"
#include "compcond/labeled_matrix.hpp"
#include "compcond/polynomial.hpp"

namespace compcond {

/// Parameters of the perturbed Frobenius matrix M_n(a, ell), 3 <= ell <= n-2.
struct MSpec {
    Rational a;
    std::size_t ell = 3;

    /// Throws Error(BadEll) unless 3 <= ell <= n-2.
    void validate(std::size_t n) const;
    std::string to_string() const;
};

/// First column -c_{n-1}, ..., -c_{ell+1}, -c_ell + a, -c_{ell-1} + a c_{n-1},
/// -c_{ell-2}, ..., -c_0; ones on the superdiagonal; -a at (n-ell+1, 2)
/// (one-based). Entries that mix coefficients with a are labeled Expr.
LabeledMatrix build_M(const MonicPolynomial& p, const MSpec& spec);

/// char_poly(build_M(p, spec)) == p.
bool m_char_poly_check(const MonicPolynomial& p, const MSpec& spec);

/// Block-formula inverse with the identity under the top row sized
/// (n-ell-1) x (n-ell-1). Throws Error(ZeroConstantTerm).
LabeledMatrix m_inverse(const MonicPolynomial& p, const MSpec& spec);

enum class KappaMode { Printed, Oracle };

/// Printed mode evaluates the printed two-factor product and needs c_0 = 1
/// (Error(NonUnitConstantTerm) otherwise); oracle mode is ||M||^2 ||M^{-1}||^2
/// from the exact entries and needs c_0 != 0.
Rational kappa_M_sq(const MonicPolynomial& p, const MSpec& spec, KappaMode mode);

/// Both sources side by side.
struct MConditionFactors {
    ConditionReport oracle;
    /// Present only when c_0 = 1.
    std::optional<ConditionReport> printed;
    /// printed.inv_norm_sq - oracle.inv_norm_sq
    std::optional<Rational> second_factor_offset;
    /// printed.norm_sq == oracle.norm_sq
    bool first_factor_agrees = false;
};

MConditionFactors m_condition_factors(const MonicPolynomial& p, const MSpec& spec);

/// p(x) = x^n + t x^{n-1} + t x^ell + t^2 x^{ell-1} + 1.
MonicPolynomial perturbation_polynomial(std::size_t n, std::size_t ell, const Rational& t);

struct PerturbationReport {
    Rational t;
    Rational kappa_f_sq;
    Rational kappa_m_oracle_sq;
    Rational kappa_m_printed_sq;
    /// kappa(F)^2 / kappa(M)^2
    Rational ratio_sq_oracle;
    Rational ratio_sq_printed;
    /// ratio_sq * 2 / t^2, which tends to 1; absent at t = 0.
    std::optional<double> scaled_oracle;
    std::optional<double> scaled_printed;
};

/// M_n(t, ell) against any Fiedler matrix of the perturbation polynomial.
PerturbationReport perturbation_case(std::size_t n, std::size_t ell, const Rational& t);

struct ImprovementReport {
    /// (c_ell c_{n-1})^2 < 2 c_{ell-1} c_ell c_{n-1} - 1
    bool hypothesis = false;
    Rational kappa_m_oracle_sq;
    Rational kappa_m_printed_sq;
    Rational kappa_f_sq;
    /// kappa(M_n(c_ell, ell)) < kappa(F), from the exact inverse.
    bool oracle_improves = false;
    /// hypothesis holds but the oracle comparison does not.
    bool divergence = false;
};

/// Requires c_0 = 1.
ImprovementReport improvement_condition(const MonicPolynomial& p, std::size_t ell);

/// {c_ell, 0, 1, -1, c_ell/2, -c_ell/2} without duplicates, in that order.
std::vector<Rational> default_a_grid(const MonicPolynomial& p, std::size_t ell);

}  // namespace compcond

#endif  // COMPCOND_GENERALIZED_HPP
