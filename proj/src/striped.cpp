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

#include "compcond/striped.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "compcond/error.hpp"
#include "compcond/fiedler.hpp"

namespace compcond {

void StripeTuple::validate(std::size_t n) const {
    if (parts.empty()) throw Error(ErrorCode::InvalidTuple, "empty stripe tuple");
    std::size_t sum = 0;
    for (std::size_t t : parts) {
        if (t == 0) throw Error(ErrorCode::InvalidTuple, "stripe lengths must be positive");
        if (t > parts.front()) {
            throw Error(ErrorCode::InvalidTuple, "t_1 = " + std::to_string(parts.front()) + " < " + std::to_string(t));
        }
        sum += t;
    }
    if (sum != n) {
        throw Error(ErrorCode::InvalidTuple, "stripes sum to " + std::to_string(sum) + ", degree is " + std::to_string(n));
    }
}

bool StripeTuple::equal_parts() const {
    return !parts.empty() && std::all_of(parts.begin(), parts.end(), [this](std::size_t t) { return t == parts[0]; });
}

std::string StripeTuple::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
    return out;
}

StripeTuple StripeTuple::parse(const std::string& text) {
    StripeTuple tuple;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const long value = std::stol(item, &used);
            if (value <= 0) throw Error(ErrorCode::ParseError, "stripe lengths are positive integers");
            tuple.parts.push_back(static_cast<std::size_t>(value));
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::ParseError, "bad stripe tuple '" + text + "'");
        }
    }
    return tuple;
}

namespace {

void extend_tuples(std::size_t remaining, std::size_t cap, StripeTuple& prefix, std::vector<StripeTuple>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::size_t t = std::min(cap, remaining); t >= 1; --t) {
        prefix.parts.push_back(t);
        extend_tuples(remaining - t, cap, prefix, out);
        prefix.parts.pop_back();
    }
}

}  // namespace

std::vector<StripeTuple> valid_stripe_tuples(std::size_t n) {
    std::vector<StripeTuple> out;
    for (std::size_t first = n; first >= 1; --first) {
        StripeTuple prefix{{first}};
        extend_tuples(n - first, first, prefix, out);
    }
    return out;
}

HessenbergCompanion build_striped(const MonicPolynomial& p, const StripeTuple& tuple) {
    require_degree(p, 2);
    const std::size_t n = p.degree();
    tuple.validate(n);
    const std::size_t r = tuple.parts.size();
    const std::size_t m = tuple.parts.front() - 1;

    std::vector<std::size_t> stripe_row(r, 0);
    for (std::size_t i = 1; i < r; ++i) stripe_row[i] = stripe_row[i - 1] + tuple.parts[i];

    std::vector<Cell> cells(n);
    std::size_t base = 0;
    for (std::size_t i = r; i-- > 0;) {
        for (std::size_t j = 0; j < tuple.parts[i]; ++j) cells[base + j] = Cell{stripe_row[i], j};
        base += tuple.parts[i];
    }
    return HessenbergCompanion::from_r_positions(p, m, cells);
}

HessenbergCompanion build_equal_striped(const MonicPolynomial& p, std::size_t k, std::size_t m) {
    if (k == 0 || k * (m + 1) != p.degree()) throw Error(ErrorCode::BadShape, "degree must equal k(m+1)");
    return build_striped(p, StripeTuple{std::vector<std::size_t>(m + 1, k)});
}

namespace {

void require_stripe_shape(const MonicPolynomial& p, std::size_t k, std::size_t m) {
    if (k == 0 || k * (m + 1) != p.degree()) {
        throw Error(ErrorCode::BadShape, "degree " + std::to_string(p.degree()) + " is not k(m+1) for k=" +
                                             std::to_string(k) + ", m=" + std::to_string(m));
    }
    require_unit_constant(p);
}

}  // namespace

Rational striped_inverse_norm_sq(const MonicPolynomial& p, std::size_t k, std::size_t m) {
    require_stripe_shape(p, k, m);
    const std::size_t n = p.degree();
    Rational total(static_cast<long>(n));
    total += p.sum_squares(1, k - 1);
    for (std::size_t j = 1; j <= m; ++j) total += square(p.coeff(j * k));
    for (std::size_t j = 1; j <= m; ++j) {
        for (std::size_t i = 1; i < k; ++i) total += square(Rational(p.coeff(i) * p.coeff(j * k) - p.coeff(j * k + i)));
    }
    return total;
}

Rational kappa_striped_sq(const MonicPolynomial& p, std::size_t k, std::size_t m) {
    Rational inverse = striped_inverse_norm_sq(p, k, m);
    return unit_sparse_norm_sq(p) * inverse;
}

DominanceReport stripe_dominance_check(const MonicPolynomial& p, std::size_t k, std::size_t m) {
    require_stripe_shape(p, k, m);
    DominanceReport report;
    for (std::size_t j = 1; j <= m; ++j) {
        for (std::size_t i = 1; i < k; ++i) {
            DominanceTerm term;
            term.j = j;
            term.i = i;
            term.cross_sq = square(Rational(p.coeff(i) * p.coeff(j * k) - p.coeff(j * k + i)));
            term.plain_sq = square(p.coeff(j * k + i));
            term.holds = term.cross_sq <= term.plain_sq;
            report.lhs += term.cross_sq;
            report.rhs += term.plain_sq;
            report.all_terms_hold = report.all_terms_hold && term.holds;
            report.terms.push_back(std::move(term));
        }
    }
    report.dominates = report.lhs <= report.rhs;
    return report;
}

void StructuredPolynomial::validate() const {
    if (k == 0 || m == 0) throw Error(ErrorCode::BadShape, "structured polynomial needs k, m >= 1");
    if (a.size() != k - 1) throw Error(ErrorCode::BadShape, "expected k-1 entries in a");
    if (b.size() != m) throw Error(ErrorCode::BadShape, "expected m entries in b");
}

MonicPolynomial StructuredPolynomial::expand() const {
    validate();
    const std::size_t n = degree();
    std::vector<Rational> q(k);
    q[0] = 1;
    for (std::size_t i = 1; i < k; ++i) q[i] = a[i - 1];
    std::vector<Rational> coeffs(n, Rational(0));
    for (std::size_t j = 0; j <= m; ++j) {
        const Rational scale = j == 0 ? Rational(1) : b[j - 1];
        for (std::size_t i = 0; i < k; ++i) coeffs[j * k + i] += scale * q[i];
    }
    return MonicPolynomial(std::move(coeffs));
}

StructuredPolynomial rank_one_example(const Rational& b, const Rational& s) {
    StructuredPolynomial sp;
    sp.k = 2;
    sp.m = 2;
    sp.a = {s};
    sp.b = {Rational(b * s), Rational(b * s * s)};
    return sp;
}

namespace {

double relative_error(const Rational& value, const Rational& target) {
    return std::fabs(to_double(Rational((value - target) / target)));
}

Rational sum_sq(const std::vector<Rational>& v) {
    Rational total(0);
    for (const auto& x : v) total += x * x;
    return total;
}

}  // namespace

StructuredRatio structured_ratio(const StructuredPolynomial& sp) {
    sp.validate();
    const Rational sa = sum_sq(sp.a);
    const Rational sb = sum_sq(sp.b);
    const Rational n(static_cast<long>(sp.degree()));

    StructuredRatio out;
    out.ratio_sq = ((1 + sb) * sa + sb + n) / (sa + sb + n);
    const MonicPolynomial p = sp.expand();
    out.ratio_sq_from_kappas = kappa_fiedler_sq(p, 1) / kappa_striped_sq(p, sp.k, sp.m);
    out.asymptote_large_b = 1 + sa;
    out.asymptote_large_a = 1 + sb;
    out.rel_error_large_b = relative_error(out.ratio_sq, out.asymptote_large_b);
    out.rel_error_large_a = relative_error(out.ratio_sq, out.asymptote_large_a);
    return out;
}

std::vector<AsymptotePoint> structured_asymptote_sweep(const StructuredPolynomial& base, ScaledVector which) {
    base.validate();
    const long magnitudes[] = {10, 100, 1000};
    const double thresholds[] = {0.1, 0.01, 0.001};
    std::vector<AsymptotePoint> points;
    for (std::size_t g = 0; g < 3; ++g) {
        StructuredPolynomial sp = base;
        auto& scaled = which == ScaledVector::A ? sp.a : sp.b;
        for (auto& x : scaled) x *= magnitudes[g];
        const StructuredRatio ratio = structured_ratio(sp);
        AsymptotePoint point;
        point.magnitude = magnitudes[g];
        point.ratio_sq = ratio.ratio_sq;
        point.asymptote = which == ScaledVector::A ? ratio.asymptote_large_a : ratio.asymptote_large_b;
        point.rel_error = which == ScaledVector::A ? ratio.rel_error_large_a : ratio.rel_error_large_b;
        point.threshold = thresholds[g];
        point.within = point.rel_error <= point.threshold;
        points.push_back(std::move(point));
    }
    return points;
}

}  // namespace compcond
