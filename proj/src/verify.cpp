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

#include "compcond/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "compcond/error.hpp"
#include "compcond/exact_linalg.hpp"
#include "compcond/fiedler.hpp"
#include "compcond/generalized.hpp"
#include "compcond/hessenberg.hpp"
#include "compcond/random.hpp"
#include "compcond/striped.hpp"

namespace compcond {

namespace {

/// One check: returns an empty string on success, a description otherwise.
using Check = std::function<std::string(Rng&)>;

class Suite {
public:
    Suite(std::uint64_t seed, std::size_t trials) : seed_(seed), trials_(trials) {}

    void run(const std::string& name, const Check& check, std::size_t count = 0) {
        PropertyResult r;
        r.name = name;
        // Each property draws from its own stream so adding one leaves the
        // others unchanged.
        Rng rng(seed_ * 0x9E3779B97F4A7C15ULL + results_.size() + 1);
        const std::size_t total = count ? count : trials_;
        for (std::size_t i = 0; i < total; ++i) {
            std::string failure;
            try {
                failure = check(rng);
            } catch (const std::exception& e) {
                failure = std::string("exception: ") + e.what();
            }
            ++r.checked;
            if (!failure.empty()) {
                if (r.failures == 0) r.counterexample = failure;
                ++r.failures;
            }
        }
        results_.push_back(std::move(r));
    }

    void skip(const std::string& name, const std::string& why) {
        PropertyResult r;
        r.name = name;
        r.skipped = why;
        results_.push_back(std::move(r));
    }

    std::vector<PropertyResult> take() { return std::move(results_); }

private:
    std::uint64_t seed_;
    std::size_t trials_;
    std::vector<PropertyResult> results_;
};

// Ascending list, accepted verbatim by `analyze --poly`.
std::string coeff_list(const MonicPolynomial& p) {
    std::string out;
    for (const Rational& c : p.coeffs()) out += (out.empty() ? "" : ",") + to_string(c);
    return out;
}

std::string describe(const MonicPolynomial& p) { return "coeffs " + coeff_list(p); }

std::size_t draw_degree(Rng& rng, std::size_t lo, std::size_t hi) {
    return lo + rng.index(hi - lo + 1);
}

std::string fail_if(bool bad, const std::string& what) { return bad ? what : std::string(); }

ConstantTerm any_constant(Rng& rng) {
    static constexpr ConstantTerm kinds[] = {ConstantTerm::NonZero, ConstantTerm::Unit, ConstantTerm::SignedUnit,
                                             ConstantTerm::BelowOne, ConstantTerm::AboveOne};
    return kinds[rng.index(5)];
}

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& r) { return r.passed(); });
}

std::size_t VerifyReport::first_factor_matches() const {
    return static_cast<std::size_t>(std::count_if(discrepancy.begin(), discrepancy.end(), [](const DiscrepancyRow& r) {
        return r.oracle_first == r.printed_first;
    }));
}

std::string VerifyReport::to_text() const {
    std::ostringstream out;
    out << "compcond verify seed=" << seed << " n-max=" << n_max << " trials=" << trials << '\n';
    for (const PropertyResult& r : properties) {
        if (!r.skipped.empty()) {
            out << "SKIP  " << r.name << "  (" << r.skipped << ")\n";
            continue;
        }
        out << (r.passed() ? "PASS  " : "FAIL  ") << r.name << "  checked=" << r.checked;
        if (!r.passed()) out << " failures=" << r.failures << "\n      counterexample: " << r.counterexample;
        out << '\n';
    }

    out << "\nsecond-factor probe, c_0 = 1 (first factor ||M||^2, second factor ||M^-1||^2):\n";
    if (discrepancy.empty()) {
        out << "  (needs n-max >= 5)\n";
    } else {
        std::set<Rational> offsets;
        for (const DiscrepancyRow& r : discrepancy) {
            out << "  n=" << r.n << " ell=" << r.ell << " a=" << to_string(r.a) << "  first " << to_string(r.oracle_first)
                << (r.oracle_first == r.printed_first ? " = " : " != ") << to_string(r.printed_first) << "  second oracle "
                << to_string(r.oracle_second) << " printed " << to_string(r.printed_second) << "  offset "
                << to_string(r.offset) << "  coeffs " << r.coeffs << '\n';
            offsets.insert(r.offset);
        }
        out << "  first factor exact agreement: " << first_factor_matches() << '/' << discrepancy.size() << '\n';
        out << "  distinct second-factor offsets (printed - oracle):";
        for (const Rational& o : offsets) out << ' ' << to_string(o);
        out << '\n';
    }
    out << "\nresult: " << (all_passed() ? "all properties passed" : "FAILURES present") << '\n';
    return out.str();
}

VerifyReport verify_suite(std::uint64_t seed, std::size_t n_max, std::size_t trials, std::size_t discrepancy_instances) {
    n_max = std::max<std::size_t>(n_max, 2);
    Suite suite(seed, trials);
    const std::size_t fiedler_max = std::min<std::size_t>(n_max, 8);

    suite.run("companion/fiedler-product", [&](Rng& rng) {
        const std::size_t n = draw_degree(rng, 2, fiedler_max);
        const MonicPolynomial p = random_polynomial(rng, n, any_constant(rng));
        const FiedlerPermutation sigma(rng.permutation(n));
        const LabeledMatrix f = fiedler_product(sigma, p);
        return fail_if(char_poly(f) != p || !check_unit_sparse_entries(f, p).ok,
                       describe(p) + " sigma = " + sigma.to_string());
    });

    suite.run("companion/lattice-path", [&](Rng& rng) {
        const std::size_t n = draw_degree(rng, 2, n_max);
        const MonicPolynomial p = random_polynomial(rng, n, any_constant(rng));
        LatticePath path;
        for (std::size_t i = 0; i + 1 < n; ++i) path.moves.push_back(rng.coin() ? Move::Right : Move::Up);
        const HessenbergCompanion c = lattice_to_hessenberg(path, p);
        return fail_if(char_poly(c.matrix()) != p || !validate_unit_sparse(c.matrix(), p).ok || !is_fiedler_hessenberg(c),
                       describe(p) + " path = " + path.to_string());
    });

    suite.run("companion/striped", [&](Rng& rng) {
        const std::size_t n = draw_degree(rng, 2, std::min<std::size_t>(n_max, 10));
        const MonicPolynomial p = random_polynomial(rng, n, any_constant(rng));
        const auto tuples = valid_stripe_tuples(n);
        const StripeTuple& t = tuples[rng.index(tuples.size())];
        const HessenbergCompanion s = build_striped(p, t);
        return fail_if(char_poly(s.matrix()) != p || !validate_unit_sparse(s.matrix(), p).ok,
                       describe(p) + " tuple = " + t.to_string());
    });

    suite.run("hessenberg/block-inverse", [&](Rng& rng) {
        const MonicPolynomial p = random_polynomial(rng, draw_degree(rng, 2, n_max), any_constant(rng));
        const HessenbergCompanion c = random_hessenberg(rng, p);
        const LabeledMatrix inv = hessenberg_inverse(c);
        return fail_if(!(c.matrix() * inv).is_identity() || !inv.same_values(invert(c.matrix())),
                       describe(p) + " m = " + std::to_string(c.m()));
    });

    suite.run("hessenberg/norm-identity", [&](Rng& rng) {
        const MonicPolynomial p = random_polynomial(rng, draw_degree(rng, 2, n_max), any_constant(rng));
        const HessenbergCompanion c = random_hessenberg(rng, p);
        return fail_if(frobenius_norm_sq(c.matrix()) != unit_sparse_norm_sq(p), describe(p));
    });

    suite.run("fiedler/closed-form-vs-oracle", [&](Rng& rng) {
        const std::size_t n = draw_degree(rng, 2, n_max);
        const MonicPolynomial p = random_polynomial(rng, n, any_constant(rng));
        const std::size_t t = 1 + rng.index(n - 1);
        const LabeledMatrix f = lattice_to_hessenberg(canonical_path(n, t), p).matrix();
        return fail_if(condition_report(f).kappa_sq != kappa_fiedler_sq(p, t), describe(p) + " t = " + std::to_string(t));
    });

    suite.run("fiedler/step-size-determines-kappa", [&](Rng& rng) {
        const std::size_t n = draw_degree(rng, 2, fiedler_max);
        const MonicPolynomial p = random_polynomial(rng, n, any_constant(rng));
        const FiedlerPermutation sigma(rng.permutation(n));
        const LabeledMatrix f = fiedler_product(sigma, p);
        const std::size_t t = initial_step_size(f);
        const Rational path_kappa = condition_report(lattice_to_hessenberg(canonical_path(n, t), p).matrix()).kappa_sq;
        return fail_if(condition_report(f).kappa_sq != path_kappa, describe(p) + " sigma = " + sigma.to_string());
    });

    suite.run("fiedler/step-size-invariant-under-equivalence", [&](Rng& rng) {
        const std::size_t n = draw_degree(rng, 2, n_max);
        const MonicPolynomial p = random_polynomial(rng, n, any_constant(rng));
        LatticePath path;
        for (std::size_t i = 0; i + 1 < n; ++i) path.moves.push_back(rng.coin() ? Move::Right : Move::Up);
        LabeledMatrix m = lattice_to_hessenberg(path, p).matrix().permuted(rng.permutation(n));
        if (rng.coin()) m = m.transposed();
        return fail_if(initial_step_size(m) != path.step_size(), describe(p) + " path = " + path.to_string());
    });

    for (ConstantTerm regime : {ConstantTerm::BelowOne, ConstantTerm::SignedUnit, ConstantTerm::AboveOne}) {
        const std::string label = regime == ConstantTerm::BelowOne   ? "|c0|<1"
                                  : regime == ConstantTerm::SignedUnit ? "|c0|=1"
                                                                       : "|c0|>1";
        suite.run("fiedler/monotone-kappa " + label, [&, regime](Rng& rng) {
            const MonicPolynomial p = random_polynomial(rng, draw_degree(rng, 2, n_max), regime);
            return fail_if(!kappa_ordering(p).direction_holds, describe(p));
        });
    }

    suite.run("fiedler/ratio-bound", [&](Rng& rng) {
        const MonicPolynomial p = random_polynomial(rng, draw_degree(rng, 2, n_max), any_constant(rng));
        const HessenbergCompanion c = random_hessenberg(rng, p, rng.coin() ? ZeroBlock::U : ZeroBlock::Y);
        return fail_if(!ratio_bound_check(c).all_hold, describe(p) + " m = " + std::to_string(c.m()));
    });

    // Equal-stripe shapes k(m+1) <= n_max with c_0 = 1.
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (std::size_t k = 1; k <= n_max; ++k) {
        for (std::size_t m = 0; k * (m + 1) <= n_max; ++m) {
            if (k * (m + 1) >= 2) shapes.emplace_back(k, m);
        }
    }
    suite.run("striped/closed-form-vs-oracle", [&](Rng& rng) {
        const auto [k, m] = shapes[rng.index(shapes.size())];
        const MonicPolynomial p = random_polynomial(rng, k * (m + 1), ConstantTerm::Unit);
        return fail_if(kappa_striped_sq(p, k, m) != condition_report(build_equal_striped(p, k, m).matrix()).kappa_sq,
                       describe(p) + " k = " + std::to_string(k) + " m = " + std::to_string(m));
    });

    suite.run("striped/dominance-iff-beats-every-fiedler", [&](Rng& rng) {
        const auto [k, m] = shapes[rng.index(shapes.size())];
        const MonicPolynomial p = random_polynomial(rng, k * (m + 1), ConstantTerm::Unit);
        const Rational ks = kappa_striped_sq(p, k, m);
        bool beats = true;
        for (std::size_t t = 1; t < p.degree(); ++t) beats = beats && ks <= kappa_fiedler_sq(p, t);
        const DominanceReport d = stripe_dominance_check(p, k, m);
        const bool ok = d.dominates == beats && (!d.all_terms_hold || d.dominates) &&
                        (rank_r(build_equal_striped(p, k, m)) != 1 || d.dominates);
        return fail_if(!ok, describe(p) + " k = " + std::to_string(k) + " m = " + std::to_string(m));
    });

    if (n_max >= 5) {
        auto draw_spec = [&](Rng& rng, std::size_t n) { return MSpec{rng.rational(9, 4), 3 + rng.index(n - 4)}; };
        suite.run("companion/generalized", [&](Rng& rng) {
            const std::size_t n = draw_degree(rng, 5, n_max);
            const MonicPolynomial p = random_polynomial(rng, n, any_constant(rng));
            const MSpec spec = draw_spec(rng, n);
            return fail_if(!m_char_poly_check(p, spec), describe(p) + " " + spec.to_string());
        });
        suite.run("generalized/block-inverse", [&](Rng& rng) {
            const std::size_t n = draw_degree(rng, 5, n_max);
            const MonicPolynomial p = random_polynomial(rng, n, any_constant(rng));
            const MSpec spec = draw_spec(rng, n);
            return fail_if(!(build_M(p, spec) * m_inverse(p, spec)).is_identity(), describe(p) + " " + spec.to_string());
        });
        suite.run("generalized/first-factor-exact", [&](Rng& rng) {
            const std::size_t n = draw_degree(rng, 5, n_max);
            const MonicPolynomial p = random_polynomial(rng, n, ConstantTerm::Unit);
            const MSpec spec = draw_spec(rng, n);
            return fail_if(!m_condition_factors(p, spec).first_factor_agrees, describe(p) + " " + spec.to_string());
        });
        suite.run("generalized/improvement-hypothesis-implies-oracle", [&](Rng& rng) {
            const std::size_t n = draw_degree(rng, std::min<std::size_t>(6, n_max), n_max);
            const MonicPolynomial p = random_polynomial(rng, n, ConstantTerm::Unit);
            const std::size_t ell = 3 + rng.index(n - 4);
            return fail_if(improvement_condition(p, ell).divergence, describe(p) + " ell = " + std::to_string(ell));
        });
    } else {
        for (const char* name : {"companion/generalized", "generalized/block-inverse", "generalized/first-factor-exact",
                                 "generalized/improvement-hypothesis-implies-oracle"}) {
            suite.skip(name, "needs n-max >= 5");
        }
    }

    VerifyReport report;
    report.seed = seed;
    report.n_max = n_max;
    report.trials = trials;
    report.properties = suite.take();

    if (n_max >= 5) {
        Rng rng(seed ^ 0xD1B54A32D192ED03ULL);
        for (std::size_t i = 0; i < discrepancy_instances; ++i) {
            const std::size_t n = draw_degree(rng, 5, n_max);
            const MonicPolynomial p = random_polynomial(rng, n, ConstantTerm::Unit);
            const MSpec spec{rng.rational(9, 4), 3 + rng.index(n - 4)};
            const MConditionFactors f = m_condition_factors(p, spec);
            report.discrepancy.push_back({n, spec.ell, spec.a, coeff_list(p), f.oracle.norm_sq, f.printed->norm_sq,
                                          f.oracle.inv_norm_sq, f.printed->inv_norm_sq, *f.second_factor_offset});
        }
    }
    return report;
}

}  // namespace compcond
