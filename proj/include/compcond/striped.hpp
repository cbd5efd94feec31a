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

#ifndef COMPCOND_STRIPED_HPP
#define COMPCOND_STRIPED_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "compcond/hessenberg.hpp"
#include "compcond/polynomial.hpp"

namespace compcond {

/// Stripe lengths (t_1, ..., t_r) with sum n and t_1 >= t_i.
struct StripeTuple {
    std::vector<std::size_t> parts;

    /// Throws Error(InvalidTuple) unless the parts are positive, sum to n,
    /// and none exceeds t_1.
    void validate(std::size_t n) const;
    bool equal_parts() const;
    /// "3,2,2"
    std::string to_string() const;
    static StripeTuple parse(const std::string& text);

    friend bool operator==(const StripeTuple&, const StripeTuple&) = default;
};

/// Every valid tuple for degree n, in lexicographically descending order.
std::vector<StripeTuple> valid_stripe_tuples(std::size_t n);

/// S_n(t): m = t_1 - 1, the bottom stripe of R holds -c_0..-c_{t_r - 1}, and
/// each stripe above it continues the coefficients after t_i - 1 zero rows.
HessenbergCompanion build_striped(const MonicPolynomial& p, const StripeTuple& tuple);

/// S_n(k, ..., k) with m+1 stripes.
HessenbergCompanion build_equal_striped(const MonicPolynomial& p, std::size_t k, std::size_t m);

/// ||S^{-1}||^2 for S_n(k, ..., k), n = k(m+1), c_0 = 1:
///   n + sum_{j<k} c_j^2 + sum_j c_{jk}^2 + sum_j sum_i (c_i c_{jk} - c_{jk+i})^2
/// Throws Error(BadShape) or Error(NonUnitConstantTerm).
Rational striped_inverse_norm_sq(const MonicPolynomial& p, std::size_t k, std::size_t m);

Rational kappa_striped_sq(const MonicPolynomial& p, std::size_t k, std::size_t m);

struct DominanceTerm {
    std::size_t j = 0;
    std::size_t i = 0;
    /// (c_i c_{jk} - c_{jk+i})^2
    Rational cross_sq;
    /// c_{jk+i}^2
    Rational plain_sq;
    bool holds = false;
};

struct DominanceReport {
    Rational lhs;
    Rational rhs;
    /// lhs <= rhs, equivalently kappa(S) <= kappa(F) for every Fiedler F.
    bool dominates = false;
    std::vector<DominanceTerm> terms;
    /// Every per-term bound |c_i c_{jk} - c_{jk+i}| <= |c_{jk+i}| holds.
    bool all_terms_hold = true;
};

DominanceReport stripe_dominance_check(const MonicPolynomial& p, std::size_t k, std::size_t m);

/// p(x) = q(x)(1 + b_1 x^k + ... + b_m x^{mk}) + x^{(m+1)k},
/// q(x) = a_{k-1} x^{k-1} + ... + a_1 x + 1.
struct StructuredPolynomial {
    std::size_t k = 1;
    std::size_t m = 1;
    std::vector<Rational> a;  ///< a_1..a_{k-1}
    std::vector<Rational> b;  ///< b_1..b_m

    void validate() const;
    std::size_t degree() const { return k * (m + 1); }
    MonicPolynomial expand() const;
};

/// The rank-one S_6(2,2,2) family p(x) = x^6 + b s^3 x^5 + b s^2 x^4 + b s^2 x^3 + b s x^2 + s x + 1.
StructuredPolynomial rank_one_example(const Rational& b, const Rational& s);

struct StructuredRatio {
    /// (kappa(F)/kappa(S))^2 from the closed quotient.
    Rational ratio_sq;
    /// The same ratio from kappa_fiedler_sq / kappa_striped_sq of the expansion.
    Rational ratio_sq_from_kappas;
    /// 1 + sum a^2, approached when sum b^2 is large.
    Rational asymptote_large_b;
    /// 1 + sum b^2, approached when sum a^2 is large.
    Rational asymptote_large_a;
    double rel_error_large_b = 0.0;
    double rel_error_large_a = 0.0;
};

StructuredRatio structured_ratio(const StructuredPolynomial& sp);

enum class ScaledVector { A, B };

struct AsymptotePoint {
    Rational magnitude;
    Rational ratio_sq;
    Rational asymptote;
    double rel_error = 0.0;
    double threshold = 0.0;
    bool within = false;
};

/// Scales `which` by 10, 100, 1000 and compares the exact ratio with the
/// matching asymptote at relative thresholds 10%, 1%, 0.1%.
std::vector<AsymptotePoint> structured_asymptote_sweep(const StructuredPolynomial& base, ScaledVector which);

}  // namespace compcond

#endif  // COMPCOND_STRIPED_HPP
