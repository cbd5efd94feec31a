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

#ifndef COMPCOND_RATIONAL_HPP
#define COMPCOND_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace compcond {

// Always canonical: gmpxx arithmetic keeps results in lowest terms with a
// positive denominator. Bind results to `Rational`, never `auto`, so the
// expression templates are evaluated.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal with optional exponent
/// ("0.5", "-1.25e3"). Decimals are converted exactly. Throws
/// Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Rational square(const Rational& q) { return Rational(q * q); }

Rational pow_int(const Rational& base, unsigned exponent);

}  // namespace compcond

#endif  // COMPCOND_RATIONAL_HPP
