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

#ifndef COMPCOND_FIEDLER_HPP
#define COMPCOND_FIEDLER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "compcond/exact_linalg.hpp"
#include "compcond/hessenberg.hpp"
#include "compcond/labeled_matrix.hpp"
#include "compcond/polynomial.hpp"

namespace compcond {

/// Order of the factors in F_{sigma_0} F_{sigma_1} ... F_{sigma_{n-1}}.
class FiedlerPermutation {
public:
    /// Throws Error(InvalidPermutation) unless `sigma` is a bijection on {0..n-1}.
    explicit FiedlerPermutation(std::vector<std::size_t> sigma);

    const std::vector<std::size_t>& sigma() const noexcept { return sigma_; }
    std::size_t size() const noexcept { return sigma_.size(); }
    std::string to_string() const;

private:
    std::vector<std::size_t> sigma_;
};

/// F_0 = diag(1, ..., 1, -c_0); F_k = diag(I_{n-k-1}, [-c_k 1; 1 0], I_{k-1}).
/// Throws Error(IndexOutOfRange) unless 0 <= k <= n-1.
LabeledMatrix fiedler_factor(std::size_t k, const MonicPolynomial& p);

/// Product of the factors in sigma order. Labels are recovered by evaluating
/// the same product at c_i = (i-th odd prime), where every entry is
/// unambiguously 0, 1 or -prime.
LabeledMatrix fiedler_product(const FiedlerPermutation& sigma, const MonicPolynomial& p);

enum class Move { Up, Right };

/// Moves from -c_0 at the bottom-left of R to -c_{n-1} at its top-right; the
/// k-th move places -c_{k+1}. The number of Right moves is the block size m.
struct LatticePath {
    std::vector<Move> moves;

    std::size_t rights() const;
    /// Length of the first run of equal moves (1 <= t <= n-1).
    std::size_t step_size() const;
    /// "RUU"
    std::string to_string() const;
    static LatticePath parse(std::string_view text);

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// All 2^(n-1) paths for degree n, Right-first lexicographic order.
std::vector<LatticePath> all_lattice_paths(std::size_t n);

/// The path whose first run is `t` moves long: Right^t Up^(n-1-t).
LatticePath canonical_path(std::size_t n, std::size_t t);

HessenbergCompanion lattice_to_hessenberg(const LatticePath& path, const MonicPolynomial& p);

/// True iff -c_{k+1} is directly above or directly right of -c_k for every k.
bool is_fiedler_hessenberg(const HessenbergCompanion& c);

/// Number of coefficients other than -c_0 in the row or column holding both
/// -c_0 and -c_1. Uses labels only. Throws Error(NotFiedler) when no line
/// contains both.
std::size_t initial_step_size(const LabeledMatrix& m);

/// kappa(F)^2 for a Fiedler matrix with initial step size t.
/// Throws Error(ZeroConstantTerm), or Error(IndexOutOfRange) for t outside [1, n-1].
Rational kappa_fiedler_sq(const MonicPolynomial& p, std::size_t t);

/// ||F^{-1}||^2 for initial step size t.
Rational fiedler_inverse_norm_sq(const MonicPolynomial& p, std::size_t t);

/// (n-1) + sum c_i^2, shared by every unit sparse companion matrix of p.
Rational unit_sparse_norm_sq(const MonicPolynomial& p);

enum class Regime { Below, Equal, Above };

std::string_view regime_name(Regime regime);

struct KappaOrdering {
    /// kappa_sq[t-1] = kappa(t)^2, t = 1..n-1.
    std::vector<Rational> kappa_sq;
    /// |c_0| compared with 1, exactly.
    Regime regime = Regime::Equal;
    /// Nondecreasing / constant / nonincreasing, matching the regime.
    bool direction_holds = false;
};

KappaOrdering kappa_ordering(const MonicPolynomial& p);

struct RatioBoundEntry {
    std::size_t step = 0;
    Rational kappa_f_sq;
    /// kappa(C)^2 / kappa(t)^2
    Rational ratio_sq;
    /// kappa(t) <= kappa(C); otherwise the pair is skipped.
    bool applicable = false;
    /// kappa(C)/kappa(t) <= kappa(t), i.e. kappa(C)^2 <= kappa(t)^4.
    bool holds = false;
};

struct RatioBoundReport {
    Rational kappa_c_sq;
    std::vector<RatioBoundEntry> entries;
    bool all_hold = true;
    std::size_t applicable_count = 0;
};

/// Checks 1 <= kappa(C)/kappa(F) <= kappa(F) against every step size with
/// kappa(F) <= kappa(C). kappa(C) comes from the exact inverse.
/// Throws Error(HypothesisNotMet) when both u and y are nonzero.
RatioBoundReport ratio_bound_check(const HessenbergCompanion& c);

}  // namespace compcond

#endif  // COMPCOND_FIEDLER_HPP
