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

#ifndef COMPCOND_EXACT_LINALG_HPP
#define COMPCOND_EXACT_LINALG_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "compcond/labeled_matrix.hpp"
#include "compcond/polynomial.hpp"
#include "compcond/rational.hpp"

namespace compcond {

/// det(xI - M), returned without its leading one. Faddeev-LeVerrier over Q.
MonicPolynomial char_poly(const LabeledMatrix& m);

/// Exact inverse by Gauss-Jordan elimination; labels of the result are Expr.
/// Throws Error(Singular) when det(M) = 0.
LabeledMatrix invert(const LabeledMatrix& m);

/// Sum of squared entries, i.e. the squared Frobenius norm.
Rational frobenius_norm_sq(const LabeledMatrix& m);

inline constexpr std::size_t kDefaultEquivalenceCap = 8;

/// True iff A = P B P^T or A = P B^T P^T for some permutation matrix P
/// (exact values). Throws Error(DimensionTooLarge) when n exceeds `cap`.
bool equivalent(const LabeledMatrix& a, const LabeledMatrix& b, std::size_t cap = kDefaultEquivalenceCap);

enum class ReportSource { ClosedForm, Oracle, Printed };

std::string_view source_name(ReportSource source);

/// kappa^2 = norm_sq * inv_norm_sq, kept exact; kappa_float = sqrt(kappa_sq).
struct ConditionReport {
    std::string family;
    std::string params;
    Rational norm_sq;
    Rational inv_norm_sq;
    Rational kappa_sq;
    double kappa_float = 0.0;
    ReportSource source = ReportSource::Oracle;
};

ConditionReport make_condition_report(Rational norm_sq, Rational inv_norm_sq, ReportSource source);

/// Oracle condition numbers straight from the entries of M and invert(M).
ConditionReport condition_report(const LabeledMatrix& m);

}  // namespace compcond

#endif  // COMPCOND_EXACT_LINALG_HPP
