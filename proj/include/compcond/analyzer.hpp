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

#ifndef COMPCOND_ANALYZER_HPP
#define COMPCOND_ANALYZER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compcond/exact_linalg.hpp"
#include "compcond/polynomial.hpp"
#include "compcond/striped.hpp"

namespace compcond {

/// Listed in tie-break order: simpler families win ties.
enum class Family { Frobenius, Fiedler, Striped, Generalized };

std::string_view family_name(Family family);
/// Throws Error(ParseError) for an unknown name.
Family parse_family(std::string_view name);
std::vector<Family> all_families();

enum class OutputFormat { Json, Csv, Table, PlotData };

std::string_view format_name(OutputFormat format);
OutputFormat parse_format(std::string_view name);

/// Largest degree for which every stripe tuple is enumerated by default;
/// above it only equal-stripe tuples are tried.
inline constexpr std::size_t kAllStripeTuplesMaxDegree = 12;

struct AnalysisRequest {
    MonicPolynomial polynomial;
    std::vector<Family> families = all_families();
    /// Unset: every step size 1..n-1.
    std::optional<std::vector<std::size_t>> fiedler_steps;
    /// Unset: every valid tuple (equal tuples only above the degree cap).
    std::optional<std::vector<StripeTuple>> stripe_tuples;
    /// Unset: default_a_grid for each ell.
    std::optional<std::vector<Rational>> a_grid;
    /// Unset: 3..n-2.
    std::optional<std::vector<std::size_t>> ell_range;
    OutputFormat format = OutputFormat::Json;
};

/// One (family, parameters, source) row. Skipped rows carry a reason and no
/// numbers.
struct ReportEntry {
    Family family = Family::Frobenius;
    std::string params;
    ReportSource source = ReportSource::Oracle;
    std::optional<ConditionReport> values;
    std::optional<std::string> skipped_reason;

    bool skipped() const { return skipped_reason.has_value(); }
};

struct Candidate {
    Family family = Family::Frobenius;
    std::string params;
    Rational kappa_sq;
    double kappa_float = 0.0;
};

struct Recommendation {
    Candidate best;
    /// Remaining candidates, best first.
    std::vector<Candidate> runners_up;
    std::string tie_break;
};

struct AnalysisResult {
    MonicPolynomial polynomial;
    std::vector<ReportEntry> reports;
    Recommendation recommendation;
};

/// Reads a coefficient document. `source` is a path if such a file exists,
/// otherwise inline text: a JSON document or a comma separated list.
/// Throws Error(ParseError), Error(DegreeTooSmall) or Error(IoError).
MonicPolynomial parse_input(const std::string& source);

/// Parses document text without touching the filesystem.
MonicPolynomial parse_polynomial_text(std::string_view text);

/// Every requested (family, parameter) pair, oracle first, then closed form
/// and printed values where they exist. The recommendation is the exact oracle
/// minimum. Throws Error(NoFeasibleFamily) when nothing could be evaluated.
AnalysisResult analyze(const AnalysisRequest& request);

/// "a..b" or a single integer.
std::vector<std::size_t> parse_index_range(std::string_view text);

}  // namespace compcond

#endif  // COMPCOND_ANALYZER_HPP
