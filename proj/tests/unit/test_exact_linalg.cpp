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

#include <cmath>

#include "compcond/error.hpp"
#include "compcond/exact_linalg.hpp"
#include "compcond/hessenberg.hpp"
#include "compcond/random.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace compcond;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no compcond::Error thrown");
    return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("parse_rational accepts fractions, integers and decimals exactly") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-6/8") == Rational(-3, 4));
    CHECK(parse_rational("  12 ") == 12);
    CHECK(parse_rational("0.5") == Rational(1, 2));
    CHECK(parse_rational("-1.25") == Rational(-5, 4));
    CHECK(parse_rational("1e3") == 1000);
    CHECK(parse_rational("2.5E-2") == Rational(1, 40));
    CHECK(parse_rational(".1") == Rational(1, 10));
    CHECK(to_string(Rational(7, 1)) == "7");
    CHECK(to_string(fixture::frac(-2, 6)) == "-1/3");
}

TEST_CASE("parse_rational rejects malformed text") {
    for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "3/4/5", "1e", "--1", "0x10"}) {
        CAPTURE(bad);
        CHECK(code_of([&] { (void)parse_rational(bad); }) == ErrorCode::ParseError);
    }
}

TEST_CASE("polynomial invariants") {
    CHECK(code_of([] { MonicPolynomial p(std::vector<Rational>{}); }) == ErrorCode::DegreeTooSmall);
    const MonicPolynomial p = make_polynomial({5, 4, 3, 2});
    CHECK(p.degree() == 4);
    CHECK(p.sum_squares(0, 3) == 54);
    CHECK(p.sum_squares(1, 3) == 29);
    CHECK(code_of([] { require_nonzero_constant(make_polynomial({0, 1})); }) == ErrorCode::ZeroConstantTerm);
    CHECK(code_of([&] { require_unit_constant(p); }) == ErrorCode::NonUnitConstantTerm);
}

TEST_CASE("char_poly of small matrices") {
    CHECK(char_poly(LabeledMatrix::identity(2)).coeffs() == std::vector<Rational>{1, -2});
    const MonicPolynomial p = make_polynomial({5, 4, 3, 2});
    CHECK(char_poly(build_frobenius(p).matrix()) == p);
    CHECK(oracle::cofactor_coeffs(build_frobenius(p).matrix()) == p.coeffs());
}

TEST_CASE("char_poly agrees with the cofactor expansion on random dense matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng.index(6);
        std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
        for (auto& row : rows) {
            for (auto& q : row) q = rng.rational(5, 3);
        }
        const LabeledMatrix m = LabeledMatrix::from_values(rows);
        CHECK(char_poly(m).coeffs() == oracle::cofactor_coeffs(m));
    }
}

TEST_CASE("invert returns an exact inverse or reports singularity") {
    CHECK(invert(LabeledMatrix::identity(5)).is_identity());
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const MonicPolynomial p = random_polynomial(rng, 2 + rng.index(7));
        const LabeledMatrix c = random_hessenberg(rng, p).matrix();
        const LabeledMatrix inv = invert(c);
        CHECK(oracle::product_is_identity(c, inv));
        CHECK(oracle::product_is_identity(inv, c));
        CHECK(inv.label(0, 0).kind == EntryKind::Expr);
    }
    const MonicPolynomial singular = make_polynomial({0, 4, 3, 2});
    CHECK(code_of([&] { (void)invert(build_frobenius(singular).matrix()); }) == ErrorCode::Singular);
}

TEST_CASE("inverse of the non-Fiedler 4x4 example") {
    const MonicPolynomial p = make_polynomial({5, 4, 3, 2});
    const LabeledMatrix inv = invert(fixture::non_fiedler_sparse(p));
    CHECK(inv.value(0, 0) == Rational(-4, 5));
    CHECK(inv.value(0, 1) == 0);
    CHECK(inv.value(0, 2) == 0);
    CHECK(inv.value(0, 3) == Rational(-1, 5));
}

TEST_CASE("frobenius_norm_sq") {
    CHECK(frobenius_norm_sq(LabeledMatrix(3)) == 0);
    CHECK(frobenius_norm_sq(LabeledMatrix::identity(6)) == 6);
    const MonicPolynomial p = fixture::degree9();
    CHECK(frobenius_norm_sq(build_frobenius(p).matrix()) == 224);
}

TEST_CASE("condition_report") {
    const ConditionReport id = condition_report(LabeledMatrix::identity(4));
    CHECK(id.kappa_sq == 16);
    CHECK(id.source == ReportSource::Oracle);
    CHECK(condition_report(build_frobenius(fixture::degree9()).matrix()).kappa_sq == 50176);
    const ConditionReport r = condition_report(build_frobenius(make_polynomial({5, 4, 3, 2})).matrix());
    CHECK(r.norm_sq == 57);
    CHECK(r.inv_norm_sq == Rational(21, 5));
    CHECK(r.kappa_sq == Rational(1197, 5));
    CHECK(r.kappa_float == doctest::Approx(std::sqrt(1197.0 / 5.0)));
    CHECK(r.kappa_sq == r.norm_sq * r.inv_norm_sq);
}

TEST_CASE("equivalence among small sparse layouts") {
    const MonicPolynomial p = make_polynomial({5, 4, 3, 2});
    const LabeledMatrix frob = build_frobenius(p).matrix();
    for (const LabeledMatrix& m : fixture::frobenius_layouts(p)) {
        CHECK(equivalent(m, frob));
        CHECK(oracle::brute_force_equivalent(m, frob));
    }
    // Generic values keep the three unit sparse examples apart.
    const MonicPolynomial g = make_polynomial({3, 5, 7, 11});
    const LabeledMatrix f1[] = {fixture::frobenius_last_row(g), fixture::fiedler_ruu(g), fixture::non_fiedler_sparse(g)};
    for (int i = 0; i < 3; ++i) {
        CHECK(equivalent(f1[i], f1[i]));
        for (int j = i + 1; j < 3; ++j) {
            CHECK_FALSE(equivalent(f1[i], f1[j]));
            CHECK_FALSE(oracle::brute_force_equivalent(f1[i], f1[j]));
        }
    }
}

TEST_CASE("equivalence is symmetric and survives further similarity") {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng.index(5);
        const MonicPolynomial p = random_polynomial(rng, n);
        const LabeledMatrix a = random_hessenberg(rng, p).matrix();
        const LabeledMatrix b = random_hessenberg(rng, p).matrix();
        const auto perm = rng.permutation(n);
        LabeledMatrix moved = a.permuted(perm);
        if (rng.coin()) moved = moved.transposed();
        CHECK(equivalent(a, moved));
        CHECK(equivalent(moved, a));
        const bool ab = equivalent(a, b);
        CHECK(ab == equivalent(b, a));
        CHECK(ab == oracle::brute_force_equivalent(a, b));
        CHECK(ab == equivalent(moved, b));
        if (ab) {
            CHECK(frobenius_norm_sq(a) == frobenius_norm_sq(b));
            CHECK(condition_report(a).kappa_sq == condition_report(b).kappa_sq);
        }
    }
}

TEST_CASE("equivalence dimension cap") {
    const LabeledMatrix big = LabeledMatrix::identity(9);
    CHECK(code_of([&] { (void)equivalent(big, big); }) == ErrorCode::DimensionTooLarge);
    CHECK(equivalent(big, big, 9));
    CHECK_FALSE(equivalent(LabeledMatrix::identity(3), LabeledMatrix::identity(4)));
}
