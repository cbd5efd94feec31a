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
#include "compcond/fiedler.hpp"
#include "compcond/generalized.hpp"
#include "compcond/hessenberg.hpp"
#include "compcond/random.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace compcond;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::IoError;
}

const MonicPolynomial& five() {
    static const MonicPolynomial p = make_polynomial({1, 2, 3, 4, 5});
    return p;
}

}  // namespace

TEST_CASE("M_7(9, 4) layout") {
    const MonicPolynomial p = make_polynomial({1, 2, 3, 4, 5, 6, 7});
    const LabeledMatrix m = build_M(p, MSpec{Rational(9), 4});
    CHECK(m.value(0, 0) == -7);
    CHECK(m.value(1, 0) == -6);
    CHECK(m.value(2, 0) == -5 + 9);
    CHECK(m.value(3, 0) == -4 + 9 * 7);
    CHECK(m.value(3, 1) == -9);
    CHECK(m.value(4, 0) == -3);
    CHECK(m.value(5, 0) == -2);
    CHECK(m.value(6, 0) == -1);
    CHECK(m.label(2, 0).kind == EntryKind::Expr);
    CHECK(m.label(3, 1).kind == EntryKind::Expr);
    CHECK(m.label(4, 0).is_coef(2));
    for (std::size_t i = 0; i + 1 < 7; ++i) CHECK(m.label(i, i + 1).kind == EntryKind::One);
    CHECK(char_poly(m) == char_poly(build_M(p, MSpec{Rational(0), 4})));
    CHECK(char_poly(m) == p);
}

TEST_CASE("n = 5 worked instance") {
    const MSpec spec{Rational(1), 3};
    using Rows = std::vector<std::vector<Rational>>;
    CHECK(build_M(five(), spec).value_rows() ==
          Rows{{-5, 1, 0, 0, 0}, {-3, 0, 1, 0, 0}, {2, -1, 0, 1, 0}, {-2, 0, 0, 0, 1}, {-1, 0, 0, 0, 0}});
    const LabeledMatrix inv = m_inverse(five(), spec);
    CHECK(inv.value_rows() ==
          Rows{{0, 0, 0, 0, -1}, {1, 0, 0, 0, -5}, {0, 1, 0, 0, -3}, {1, 0, 1, 0, -3}, {0, 0, 0, 1, -2}});
    CHECK(inv.same_values(invert(build_M(five(), spec))));
    CHECK(kappa_M_sq(five(), spec, KappaMode::Oracle) == 2544);
    CHECK(kappa_M_sq(five(), spec, KappaMode::Printed) == 2592);

    const MConditionFactors f = m_condition_factors(five(), spec);
    CHECK(f.oracle.norm_sq == 48);
    CHECK(f.oracle.inv_norm_sq == 53);
    REQUIRE(f.printed.has_value());
    CHECK(f.printed->norm_sq == 48);
    CHECK(f.printed->inv_norm_sq == 54);
    CHECK(f.first_factor_agrees);
    CHECK(*f.second_factor_offset == 1);
}

TEST_CASE("ell range") {
    CHECK(code_of([] { (void)build_M(five(), MSpec{Rational(0), 2}); }) == ErrorCode::BadEll);
    CHECK(code_of([] { (void)build_M(five(), MSpec{Rational(0), 4}); }) == ErrorCode::BadEll);
    CHECK(code_of([] { (void)build_M(make_polynomial({1, 1, 1, 1}), MSpec{Rational(0), 3}); }) == ErrorCode::BadEll);
    CHECK_NOTHROW((void)build_M(make_polynomial({1, 1, 1, 1, 1, 1, 1}), MSpec{Rational(0), 5}));
}

TEST_CASE("a = 0 reduces to the Frobenius matrix") {
    Rng rng(6);
    for (std::size_t n = 5; n <= 7; ++n) {
        for (std::size_t ell = 3; ell + 2 <= n; ++ell) {
            const MonicPolynomial p = random_polynomial(rng, n, ConstantTerm::Unit);
            const MSpec spec{Rational(0), ell};
            const LabeledMatrix m = build_M(p, spec);
            CHECK(equivalent(m, build_frobenius(p).matrix()));
            CHECK(validate_unit_sparse(m, p).ok);
            CHECK(frobenius_norm_sq(m_inverse(p, spec)) == fiedler_inverse_norm_sq(p, n - 1));
            CHECK(kappa_M_sq(p, spec, KappaMode::Oracle) == kappa_fiedler_sq(p, n - 1));
        }
    }
}

TEST_CASE("companion property and block inverse on random instances") {
    Rng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 5 + rng.index(6);
        const std::size_t ell = 3 + rng.index(n - 4);
        const MonicPolynomial p = random_polynomial(rng, n);
        const MSpec spec{rng.rational(9, 4), ell};
        const LabeledMatrix m = build_M(p, spec);
        CHECK(m_char_poly_check(p, spec));
        CHECK(oracle::product_is_identity(m, m_inverse(p, spec)));
        if (n <= 7) CHECK(oracle::cofactor_coeffs(m) == p.coeffs());
    }
    const MonicPolynomial p6 = random_polynomial(rng, 6);
    CHECK(m_char_poly_check(p6, MSpec{Rational(1000000), 3}));
    CHECK(m_char_poly_check(p6, MSpec{Rational(1000000), 4}));
}

TEST_CASE("m_inverse needs c_0 != 0, printed mode needs c_0 = 1") {
    const MonicPolynomial zero = make_polynomial({0, 2, 3, 4, 5});
    CHECK(code_of([&] { (void)m_inverse(zero, MSpec{Rational(1), 3}); }) == ErrorCode::ZeroConstantTerm);
    const MonicPolynomial two = make_polynomial({2, 2, 3, 4, 5});
    CHECK(code_of([&] { (void)kappa_M_sq(two, MSpec{Rational(1), 3}, KappaMode::Printed); }) ==
          ErrorCode::NonUnitConstantTerm);
    CHECK_NOTHROW((void)kappa_M_sq(two, MSpec{Rational(1), 3}, KappaMode::Oracle));
    CHECK_FALSE(m_condition_factors(two, MSpec{Rational(1), 3}).printed.has_value());
}

TEST_CASE("first factor always agrees, second differs by a constant") {
    Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 5 + rng.index(5);
        const MonicPolynomial p = random_polynomial(rng, n, ConstantTerm::Unit);
        const MConditionFactors f = m_condition_factors(p, MSpec{rng.rational(9, 4), 3 + rng.index(n - 4)});
        CHECK(f.first_factor_agrees);
        CHECK(*f.second_factor_offset == 1);
    }
}

TEST_CASE("perturbation family") {
    const PerturbationReport zero = perturbation_case(7, 3, Rational(0));
    CHECK(zero.ratio_sq_oracle == 1);
    CHECK_FALSE(zero.scaled_oracle.has_value());

    const double thresholds[] = {0.1, 0.01, 0.001};
    long t = 10;
    for (double threshold : thresholds) {
        const PerturbationReport r = perturbation_case(7, 3, Rational(t));
        REQUIRE(r.scaled_oracle.has_value());
        CHECK(std::abs(*r.scaled_oracle - 1.0) < threshold);
        const Rational tt(t);
        const Rational printed = (7 + 2 * tt * tt) * (8 + 2 * tt * tt + tt * tt * tt * tt);
        CHECK(r.kappa_m_printed_sq == printed);
        t *= 10;
    }
    CHECK(code_of([] { (void)perturbation_case(7, 6, Rational(1)); }) == ErrorCode::BadEll);
}

TEST_CASE("improvement condition") {
    // c_6 = 1, c_3 = 1, c_2 = 2 for n = 7, ell = 3.
    const MonicPolynomial p = make_polynomial({1, 0, 2, 1, 0, 0, 1});
    const ImprovementReport r = improvement_condition(p, 3);
    CHECK(r.hypothesis);
    CHECK(r.oracle_improves);
    CHECK_FALSE(r.divergence);

    const MonicPolynomial flat = make_polynomial({1, 0, 2, 1, 0, 0, 0});
    CHECK_FALSE(improvement_condition(flat, 3).hypothesis);
    CHECK(code_of([] { (void)improvement_condition(make_polynomial({2, 0, 2, 1, 0, 0, 1}), 3); }) ==
          ErrorCode::NonUnitConstantTerm);

    Rng rng(43);
    int held = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 6 + rng.index(4);
        const MonicPolynomial q = random_polynomial(rng, n, ConstantTerm::Unit);
        const ImprovementReport rep = improvement_condition(q, 3 + rng.index(n - 4));
        if (rep.hypothesis) {
            ++held;
            CHECK(rep.oracle_improves);
        }
    }
    MESSAGE("hypothesis held in " << held << " of 200 draws");
}

TEST_CASE("default a grid") {
    const std::vector<Rational> grid = default_a_grid(five(), 3);
    CHECK(grid == std::vector<Rational>{4, 0, 1, -1, 2, -2});
    const MonicPolynomial ones = make_polynomial({1, 1, 1, 1, 1});
    CHECK(default_a_grid(ones, 3) == std::vector<Rational>{1, 0, -1, Rational(1, 2), Rational(-1, 2)});
}
