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

#ifndef COMPCOND_REPORT_HPP
#define COMPCOND_REPORT_HPP

#include <string>
#include <vector>

#include "compcond/analyzer.hpp"
#include "compcond/generalized.hpp"

namespace compcond {

/// Serializes an analysis. JSON carries one report per (family, params,
/// source); CSV and table carry one row per (family, params) with the oracle
/// value in the main columns; plotdata lists (index, params, kappa) columns.
std::string emit_report(const AnalysisResult& result, OutputFormat format);

/// Reads back the JSON form produced by emit_report. Throws Error(ParseError).
AnalysisResult reports_from_json(const std::string& text);

/// Perturbation sweep: t, exact ratios in both sources, and ratio/t against
/// 1/sqrt(2).
std::string emit_perturbation(std::size_t n, std::size_t ell, const std::vector<PerturbationReport>& rows,
                              OutputFormat format);

/// Writes `text` to `path`, or to stdout when path is empty or "-".
/// Throws Error(IoError).
void write_output(const std::string& path, const std::string& text);

}  // namespace compcond

#endif  // COMPCOND_REPORT_HPP
