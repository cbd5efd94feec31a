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

#include "compcond/polynomial.hpp"

#include <sstream>

#include "compcond/error.hpp"

namespace compcond {

MonicPolynomial::MonicPolynomial(std::vector<Rational> coeffs_ascending) : coeffs_(std::move(coeffs_ascending)) {
    if (coeffs_.empty()) throw Error(ErrorCode::DegreeTooSmall, "a monic polynomial needs degree >= 1");
}

Rational MonicPolynomial::sum_squares(std::size_t first, std::size_t last) const {
    Rational total(0);
    for (std::size_t i = first; i <= last && i < coeffs_.size(); ++i) total += coeffs_[i] * coeffs_[i];
    return total;
}

std::string MonicPolynomial::to_string() const {
    std::ostringstream out;
    const std::size_t n = degree();
    out << "x^" << n;
    for (std::size_t k = n; k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        out << (c < 0 ? " - " : " + ");
        Rational mag = abs_value(c);
        bool show_coeff = mag != 1 || k == 0;
        if (show_coeff) {
            if (mag.get_den() != 1 && k > 0) {
                out << "(" << compcond::to_string(mag) << ")";
            } else {
                out << compcond::to_string(mag);
            }
        }
        if (k >= 1) out << "x";
        if (k >= 2) out << "^" << k;
    }
    return out.str();
}

void require_degree(const MonicPolynomial& p, std::size_t min_degree) {
    if (p.degree() < min_degree) {
        throw Error(ErrorCode::DegreeTooSmall,
                    "degree " + std::to_string(p.degree()) + " < " + std::to_string(min_degree));
    }
}

void require_nonzero_constant(const MonicPolynomial& p) {
    if (p.coeff(0) == 0) throw Error(ErrorCode::ZeroConstantTerm, "c_0 = 0");
}

void require_unit_constant(const MonicPolynomial& p) {
    if (p.coeff(0) != 1) {
        throw Error(ErrorCode::NonUnitConstantTerm, "c_0 = " + compcond::to_string(p.coeff(0)) + ", expected 1");
    }
}

MonicPolynomial make_polynomial(const std::vector<long>& coeffs_ascending) {
    std::vector<Rational> coeffs;
    coeffs.reserve(coeffs_ascending.size());
    for (long c : coeffs_ascending) coeffs.emplace_back(c);
    return MonicPolynomial(std::move(coeffs));
}

}  // namespace compcond
