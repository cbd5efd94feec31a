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

#ifndef COMPCOND_POLYNOMIAL_HPP
#define COMPCOND_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "compcond/rational.hpp"

namespace compcond {

/// p(x) = x^n + c_{n-1} x^{n-1} + ... + c_1 x + c_0, stored ascending
/// without the leading one.
class MonicPolynomial {
public:
    /// Throws Error(DegreeTooSmall) for an empty coefficient list.
    explicit MonicPolynomial(std::vector<Rational> coeffs_ascending);

    std::size_t degree() const noexcept { return coeffs_.size(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& coeff(std::size_t i) const { return coeffs_.at(i); }

    /// Sum of c_i^2 for first <= i <= last.
    Rational sum_squares(std::size_t first, std::size_t last) const;

    /// "x^4 + 2x^3 + ... + 5"
    std::string to_string() const;

    friend bool operator==(const MonicPolynomial& a, const MonicPolynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const MonicPolynomial& a, const MonicPolynomial& b) { return !(a == b); }

private:
    std::vector<Rational> coeffs_;
};

/// Throws Error(DegreeTooSmall) unless p has degree at least `min_degree`.
void require_degree(const MonicPolynomial& p, std::size_t min_degree);

/// Throws Error(ZeroConstantTerm) when c_0 = 0.
void require_nonzero_constant(const MonicPolynomial& p);

/// Throws Error(NonUnitConstantTerm) when c_0 != 1.
void require_unit_constant(const MonicPolynomial& p);

MonicPolynomial make_polynomial(const std::vector<long>& coeffs_ascending);

}  // namespace compcond

#endif  // COMPCOND_POLYNOMIAL_HPP
