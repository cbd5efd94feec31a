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

#ifndef COMPCOND_VERIFY_HPP
#define COMPCOND_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "compcond/rational.hpp"

namespace compcond {

struct PropertyResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    /// First failing instance, empty when everything passed.
    std::string counterexample;
    /// Set when the property could not run at this n-max.
    std::string skipped;

    bool passed() const { return failures == 0; }
};

/// Printed second factor versus the exact inverse, one random c_0 = 1 instance.
struct DiscrepancyRow {
    std::size_t n = 0;
    std::size_t ell = 0;
    Rational a;
    /// Ascending coefficient list, comma separated.
    std::string coeffs;
    Rational oracle_first;
    Rational printed_first;
    Rational oracle_second;
    Rational printed_second;
    /// printed_second - oracle_second
    Rational offset;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::size_t n_max = 0;
    std::size_t trials = 0;
    std::vector<PropertyResult> properties;
    std::vector<DiscrepancyRow> discrepancy;

    bool all_passed() const;
    /// Number of probe rows whose first factors agree exactly.
    std::size_t first_factor_matches() const;
    /// Deterministic plain-text rendering.
    std::string to_text() const;
};

/// Random property sweep over degrees 2..n_max (generalized checks use
/// 5..n_max). Identical arguments give byte-identical to_text() output.
VerifyReport verify_suite(std::uint64_t seed, std::size_t n_max, std::size_t trials,
                          std::size_t discrepancy_instances = 20);

}  // namespace compcond

#endif  // COMPCOND_VERIFY_HPP
