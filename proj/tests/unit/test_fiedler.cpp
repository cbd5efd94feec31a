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

#include <algorithm>
#include <numeric>

#include "compcond/error.hpp"
#include "compcond/exact_linalg.hpp"
#include "compcond/fiedler.hpp"
#include "compcond/random.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace compcond;

namespace {

std::vector<std::size_t> iota_vec(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

TEST_CASE("fiedler factors") {
    const MonicPolynomial p = make_polynomial({5, 4, 3, 2});
    using Rows = std::vector<std::vector<Rational>>;
    CHECK(fiedler_factor(0, p).value_rows() == Rows{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -5}});
    CHECK(fiedler_factor(3, p).value_rows() == Rows{{-2, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(fiedler_factor(2, p).value_rows() == Rows{{1, 0, 0, 0}, {0, -3, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    CHECK(fiedler_factor(2, p).label(1, 1).is_coef(2));
    CHECK_THROWS_AS((void)fiedler_factor(4, p), Error);
}

TEST_CASE("FiedlerPermutation validates its input") {
    CHECK_THROWS_AS(FiedlerPermutation({0, 0, 1}), Error);
    CHECK_THROWS_AS(FiedlerPermutation({0, 3, 1}), Error);
    CHECK(FiedlerPermutation({2, 0, 1}).size() == 3);
}

TEST_CASE("identity-order product is the Frobenius matrix up to equivalence") {
    for (std::size_t n = 2; n <= 7; ++n) {
        std::vector<long> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<long>(i) + 2;
        const MonicPolynomial p = make_polynomial(c);
        const LabeledMatrix f = fiedler_product(FiedlerPermutation(iota_vec(n)), p);
        CHECK(equivalent(f, build_frobenius(p).matrix()));
    }
}

TEST_CASE("fiedler products for random orders") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.index(6);
        const MonicPolynomial p = random_polynomial(rng, n);
        const LabeledMatrix f = fiedler_product(FiedlerPermutation(rng.permutation(n)), p);
        CHECK(oracle::cofactor_coeffs(f) == p.coeffs());
        CHECK(check_unit_sparse_entries(f, p).ok);
    }
}

TEST_CASE("the reversed product for n = 4 matches a lattice form of its step size") {
    const MonicPolynomial p = make_polynomial({5, 4, 3, 2});
    const LabeledMatrix f = fiedler_product(FiedlerPermutation({3, 2, 1, 0}), p);
    const std::size_t t = initial_step_size(f);
    bool matched = false;
    for (const LatticePath& path : all_lattice_paths(4)) {
        if (path.step_size() != t) continue;
        matched = matched || equivalent(f, lattice_to_hessenberg(path, p).matrix());
    }
    CHECK(matched);
}

TEST_CASE("every product is equivalent to a lattice path form, n <= 5") {
    for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<long> primes{3, 5, 7, 11, 13};
        const MonicPolynomial p = make_polynomial(std::vector<long>(primes.begin(), primes.begin() + n));
        std::vector<LabeledMatrix> forms;
        for (const LatticePath& path : all_lattice_paths(n)) forms.push_back(lattice_to_hessenberg(path, p).matrix());
        auto sigma = iota_vec(n);
        do {
            const LabeledMatrix f = fiedler_product(FiedlerPermutation(sigma), p);
            const bool any = std::any_of(forms.begin(), forms.end(), [&](const LabeledMatrix& g) { return equivalent(f, g); });
            CHECK(any);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
}

TEST_CASE("lattice paths") {
    CHECK(all_lattice_paths(4).size() == 8);
    CHECK(all_lattice_paths(4).front().to_string() == "RRR");
    CHECK(all_lattice_paths(4).back().to_string() == "UUU");
    const LatticePath path = LatticePath::parse("RUU");
    CHECK(path.rights() == 1);
    CHECK(path.step_size() == 1);
    CHECK(LatticePath::parse("UURRU").step_size() == 2);
    CHECK(canonical_path(6, 2).to_string() == "RRUUU");
    CHECK_THROWS_AS((void)LatticePath::parse("RXU"), Error);

    const MonicPolynomial p = make_polynomial({5, 4, 3, 2});
    CHECK(lattice_to_hessenberg(LatticePath::parse("RRR"), p).matrix().same_values(fixture::frobenius_last_row(p)));
    const LabeledMatrix second = lattice_to_hessenberg(path, p).matrix();
    CHECK(second.same_values(fixture::fiedler_ruu(p)));
    CHECK(second.label(1, 1).is_coef(3));

    const MonicPolynomial p7 = make_polynomial({2, -1, 3, 5, 0, 7, 1});
    const HessenbergCompanion c7 = lattice_to_hessenberg(LatticePath::parse("RRUUUU"), p7);
    CHECK(c7.m() == 2);
    CHECK(oracle::cofactor_coeffs(c7.matrix()) == p7.coeffs());
}

TEST_CASE("every lattice path gives a valid Fiedler Hessenberg form, n <= 8") {
    Rng rng(4);
    for (std::size_t n = 2; n <= 8; ++n) {
        const MonicPolynomial p = random_polynomial(rng, n);
        for (const LatticePath& path : all_lattice_paths(n)) {
            const HessenbergCompanion c = lattice_to_hessenberg(path, p);
            CHECK(validate_unit_sparse(c.matrix(), p).ok);
            CHECK(is_fiedler_hessenberg(c));
            CHECK(char_poly(c.matrix()) == p);
            CHECK(initial_step_size(c.matrix()) == path.step_size());
        }
    }
}

TEST_CASE("is_fiedler_hessenberg and initial_step_size on the 4x4 examples") {
    const MonicPolynomial p = make_polynomial({5, 4, 3, 2});
    CHECK(is_fiedler_hessenberg(as_hessenberg(fixture::frobenius_last_row(p), p)));
    CHECK(is_fiedler_hessenberg(as_hessenberg(fixture::fiedler_ruu(p), p)));
    CHECK_FALSE(is_fiedler_hessenberg(as_hessenberg(fixture::non_fiedler_sparse(p), p)));
    CHECK(initial_step_size(fixture::frobenius_last_row(p)) == 3);
    CHECK(initial_step_size(fixture::fiedler_ruu(p)) == 1);
    CHECK(initial_step_size(fixture::non_fiedler_sparse(p)) == 1);
    CHECK(initial_step_size(build_frobenius(make_polynomial({1, 0, 0, 0, 0})).matrix()) == 4);
    try {
        (void)initial_step_size(LabeledMatrix::identity(4));
        FAIL("expected NotFiedler");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotFiedler);
    }
}

TEST_CASE("initial_step_size survives equivalence and coincident values") {
    Rng rng(9);
    const MonicPolynomial ones = make_polynomial({1, 1, 1, 1, 1, 1});
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 6;
        const LatticePath path = all_lattice_paths(n).at(rng.index(32));
        LabeledMatrix m = lattice_to_hessenberg(path, ones).matrix().permuted(rng.permutation(n));
        if (rng.coin()) m = m.transposed();
        CHECK(initial_step_size(m) == path.step_size());
    }
}

TEST_CASE("kappa_fiedler_sq closed form") {
    const MonicPolynomial p9 = fixture::degree9();
    for (std::size_t t = 1; t <= 8; ++t) CHECK(kappa_fiedler_sq(p9, t) == 50176);
    for (std::size_t n = 2; n <= 7; ++n) {
        std::vector<Rational> c(n, Rational(0));
        c[0] = 1;
        for (std::size_t t = 1; t < n; ++t) CHECK(kappa_fiedler_sq(MonicPolynomial(c), t) == static_cast<long>(n * n));
    }
    const MonicPolynomial p = make_polynomial({5, 4, 3, 2});
    CHECK(kappa_fiedler_sq(p, 3) == Rational(1197, 5));
    CHECK(kappa_fiedler_sq(p, 1) == fixture::frac(57 * 417, 25));
    CHECK(kappa_fiedler_sq(p, 2) == fixture::frac(57 * 201, 25));
    for (std::size_t t = 1; t <= 3; ++t) {
        CHECK(kappa_fiedler_sq(p, t) == condition_report(lattice_to_hessenberg(canonical_path(4, t), p).matrix()).kappa_sq);
    }
    CHECK_THROWS_AS((void)kappa_fiedler_sq(p, 0), Error);
    CHECK_THROWS_AS((void)kappa_fiedler_sq(p, 4), Error);
    CHECK_THROWS_AS((void)kappa_fiedler_sq(make_polynomial({0, 1, 2}), 1), Error);
}

TEST_CASE("closed form agrees with the oracle on random polynomials") {
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng.index(7);
        const MonicPolynomial p = random_polynomial(rng, n);
        const LatticePath path = all_lattice_paths(n).at(rng.index(std::size_t{1} << (n - 1)));
        const LabeledMatrix f = lattice_to_hessenberg(path, p).matrix();
        const ConditionReport r = condition_report(f);
        CHECK(r.kappa_sq == kappa_fiedler_sq(p, path.step_size()));
        CHECK(r.norm_sq == unit_sparse_norm_sq(p));
        CHECK(r.inv_norm_sq == fiedler_inverse_norm_sq(p, path.step_size()));
    }
}

TEST_CASE("equal step size means equal condition number, all orders n <= 5") {
    Rng rng(31);
    for (std::size_t n = 2; n <= 5; ++n) {
        const MonicPolynomial p = random_polynomial(rng, n);
        auto sigma = iota_vec(n);
        do {
            const LabeledMatrix f = fiedler_product(FiedlerPermutation(sigma), p);
            CHECK(condition_report(f).kappa_sq == kappa_fiedler_sq(p, initial_step_size(f)));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
}

TEST_CASE("inverse entry census at generic coefficients") {
    const std::vector<long> primes{3, 5, 7, 11, 13, 17, 19};
    for (std::size_t n = 2; n <= 7; ++n) {
        const MonicPolynomial p = make_polynomial(std::vector<long>(primes.begin(), primes.begin() + n));
        for (const LatticePath& path : all_lattice_paths(n)) {
            const std::size_t t = path.step_size();
            const LabeledMatrix inv = invert(lattice_to_hessenberg(path, p).matrix());
            std::vector<Rational> expected(n - 1, Rational(1));
            expected.push_back(fixture::frac(-1, primes[0]));
            for (std::size_t i = 1; i <= t; ++i) expected.push_back(fixture::frac(-primes[i], primes[0]));
            for (std::size_t i = t + 1; i < n; ++i) expected.push_back(Rational(primes[i]));
            std::vector<Rational> actual;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (inv.value(i, j) != 0) actual.push_back(inv.value(i, j));
                }
            }
            std::sort(expected.begin(), expected.end());
            std::sort(actual.begin(), actual.end());
            CHECK(actual == expected);
        }
    }
}

TEST_CASE("kappa_ordering regimes") {
    const KappaOrdering equal = kappa_ordering(fixture::degree9());
    CHECK(equal.regime == Regime::Equal);
    CHECK(equal.direction_holds);
    CHECK(std::all_of(equal.kappa_sq.begin(), equal.kappa_sq.end(), [](const Rational& k) { return k == 50176; }));

    const KappaOrdering above = kappa_ordering(make_polynomial({5, 4, 3, 2}));
    CHECK(above.regime == Regime::Above);
    CHECK(above.direction_holds);
    CHECK(above.kappa_sq == std::vector<Rational>{fixture::frac(57 * 417, 25), fixture::frac(57 * 201, 25), fixture::frac(57 * 105, 25)});

    const KappaOrdering below =
        kappa_ordering(MonicPolynomial({Rational(1, 2), Rational(1), Rational(1), Rational(1)}));
    CHECK(below.regime == Regime::Below);
    CHECK(below.direction_holds);
    CHECK(std::is_sorted(below.kappa_sq.begin(), below.kappa_sq.end()));
    CHECK(regime_name(Regime::Below) == "|c0|<1");
}

TEST_CASE("ratio bound") {
    const MonicPolynomial zero_u = make_polynomial({5, 4, 0, 2});
    const RatioBoundReport r = ratio_bound_check(as_hessenberg(fixture::non_fiedler_sparse(zero_u), zero_u));
    CHECK(r.all_hold);
    CHECK(r.entries.size() == 3);
    CHECK(r.applicable_count >= 1);

    const MonicPolynomial p = make_polynomial({5, 4, 3, 2});
    const RatioBoundReport self = ratio_bound_check(lattice_to_hessenberg(canonical_path(4, 2), p));
    CHECK(self.all_hold);
    CHECK(self.entries[1].ratio_sq == 1);

    try {
        (void)ratio_bound_check(as_hessenberg(fixture::non_fiedler_sparse(p), p));
        FAIL("expected HypothesisNotMet");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HypothesisNotMet);
    }

    Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const MonicPolynomial q = random_polynomial(rng, 2 + rng.index(7));
        const RatioBoundReport rep = ratio_bound_check(random_hessenberg(rng, q, ZeroBlock::Y));
        CHECK(rep.all_hold);
        for (const RatioBoundEntry& e : rep.entries) {
            if (e.applicable) CHECK(e.ratio_sq >= 1);
        }
    }
}
