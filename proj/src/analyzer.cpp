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

#include "compcond/analyzer.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "compcond/error.hpp"
#include "compcond/fiedler.hpp"
#include "compcond/generalized.hpp"
#include "compcond/hessenberg.hpp"
#include "json.hpp"

namespace compcond {

namespace {

constexpr Family kFamilies[] = {Family::Frobenius, Family::Fiedler, Family::Striped, Family::Generalized};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

MonicPolynomial finish(std::vector<Rational> coeffs) {
    if (coeffs.size() < 2) {
        throw Error(ErrorCode::DegreeTooSmall, "need at least two coefficients (degree >= 2), got " +
                                                   std::to_string(coeffs.size()));
    }
    return MonicPolynomial(std::move(coeffs));
}

Rational json_coefficient(const nlohmann::json& value) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    // Numbers go through their shortest decimal text, so 0.1 means 1/10.
    if (value.is_number()) return parse_rational(value.dump());
    throw Error(ErrorCode::ParseError, "coefficients must be strings or numbers, got " + value.dump());
}

MonicPolynomial parse_json_document(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "coefficient document must be a JSON object");

    const bool has_plain = doc.contains("coeffs");
    const bool has_ascending = doc.contains("coeffs_ascending");
    if (has_plain == has_ascending) {
        throw Error(ErrorCode::ParseError, "document needs exactly one of \"coeffs\" or \"coeffs_ascending\"");
    }
    const nlohmann::json& list = has_plain ? doc["coeffs"] : doc["coeffs_ascending"];
    if (!list.is_array()) throw Error(ErrorCode::ParseError, "coefficient list must be an array");

    std::string order = "ascending";
    if (doc.contains("order")) {
        if (!doc["order"].is_string()) throw Error(ErrorCode::ParseError, "\"order\" must be a string");
        order = doc["order"].get<std::string>();
    }
    if (order != "ascending" && order != "descending") {
        throw Error(ErrorCode::ParseError, "\"order\" must be \"ascending\" or \"descending\", got \"" + order + "\"");
    }
    if (has_ascending && order != "ascending") {
        throw Error(ErrorCode::ParseError, "\"coeffs_ascending\" contradicts \"order\": \"" + order + "\"");
    }

    std::vector<Rational> coeffs;
    coeffs.reserve(list.size());
    for (const auto& item : list) coeffs.push_back(json_coefficient(item));
    if (order == "descending") std::reverse(coeffs.begin(), coeffs.end());

    if (doc.contains("degree")) {
        const auto& degree = doc["degree"];
        if (!degree.is_number_integer() || degree.get<long long>() != static_cast<long long>(coeffs.size())) {
            throw Error(ErrorCode::ParseError, "\"degree\" " + degree.dump() + " does not match " +
                                                   std::to_string(coeffs.size()) + " coefficients");
        }
    }
    return finish(std::move(coeffs));
}

/// Comma lists and one-per-line files share this path. An alphabetic first
/// line is taken as a header.
MonicPolynomial parse_list(std::string_view text) {
    std::vector<Rational> coeffs;
    bool first_line = true;
    for (std::string_view line : split(text, '\n')) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        if (first_line && std::isalpha(static_cast<unsigned char>(line.front()))) {
            first_line = false;
            continue;
        }
        first_line = false;
        const auto cells = split(line, ',');
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const std::string_view cell = trim(cells[i]);
            // Tolerate one trailing separator per line.
            if (cell.empty() && i + 1 == cells.size() && i > 0) continue;
            coeffs.push_back(parse_rational(cell));
        }
    }
    return finish(std::move(coeffs));
}

struct Row {
    ReportEntry entry;
    /// Tie-break key inside a family.
    std::vector<Rational> key;
};

class Collector {
public:
    void add(Family family, const std::string& params, ReportSource source, ConditionReport values,
             const std::vector<Rational>& key = {}) {
        values.family = std::string(family_name(family));
        values.params = params;
        values.source = source;
        ReportEntry e;
        e.family = family;
        e.params = params;
        e.source = source;
        e.values = std::move(values);
        rows_.push_back({std::move(e), key});
    }

    void skip(Family family, const std::string& params, ReportSource source, std::string reason) {
        ReportEntry e;
        e.family = family;
        e.params = params;
        e.source = source;
        e.skipped_reason = std::move(reason);
        rows_.push_back({std::move(e), {}});
    }

    std::vector<Row>& rows() { return rows_; }

private:
    std::vector<Row> rows_;
};

ConditionReport closed(const Rational& norm_sq, const Rational& kappa_sq) {
    return make_condition_report(norm_sq, Rational(kappa_sq / norm_sq), ReportSource::ClosedForm);
}

std::string reason_of(const Error& e) {
    std::string text = e.what();
    const std::string prefix = std::string(error_code_name(e.code())) + ": ";
    if (text.rfind(prefix, 0) == 0) text.erase(0, prefix.size());
    return std::string(error_code_name(e.code())) + " (" + text + ")";
}

void frobenius_rows(const MonicPolynomial& p, Collector& out) {
    const std::size_t n = p.degree();
    const std::string params = "m=0";
    out.add(Family::Frobenius, params, ReportSource::Oracle, condition_report(build_frobenius(p).matrix()));
    out.add(Family::Frobenius, params, ReportSource::ClosedForm, closed(unit_sparse_norm_sq(p), kappa_fiedler_sq(p, n - 1)));
}

void fiedler_rows(const MonicPolynomial& p, const std::optional<std::vector<std::size_t>>& steps, Collector& out) {
    const std::size_t n = p.degree();
    std::vector<std::size_t> list;
    if (steps) {
        list = *steps;
    } else {
        for (std::size_t t = 1; t < n; ++t) list.push_back(t);
    }
    for (std::size_t t : list) {
        const std::string params = "t=" + std::to_string(t);
        if (t < 1 || t >= n) {
            out.skip(Family::Fiedler, params, ReportSource::Oracle, "step size must lie in 1..n-1");
            continue;
        }
        const std::vector<Rational> key{Rational(static_cast<long>(t))};
        const LabeledMatrix f = lattice_to_hessenberg(canonical_path(n, t), p).matrix();
        out.add(Family::Fiedler, params, ReportSource::Oracle, condition_report(f), key);
        out.add(Family::Fiedler, params, ReportSource::ClosedForm, closed(unit_sparse_norm_sq(p), kappa_fiedler_sq(p, t)),
                key);
    }
}

void striped_rows(const MonicPolynomial& p, const std::optional<std::vector<StripeTuple>>& tuples, Collector& out) {
    const std::size_t n = p.degree();
    std::vector<StripeTuple> list;
    if (tuples) {
        list = *tuples;
    } else if (n <= kAllStripeTuplesMaxDegree) {
        list = valid_stripe_tuples(n);
    } else {
        for (std::size_t k = n; k >= 1; --k) {
            if (n % k == 0) list.push_back(StripeTuple{std::vector<std::size_t>(n / k, k)});
        }
    }
    for (const StripeTuple& tuple : list) {
        const std::string params = "t=" + tuple.to_string();
        try {
            tuple.validate(n);
        } catch (const Error& e) {
            out.skip(Family::Striped, params, ReportSource::Oracle, reason_of(e));
            continue;
        }
        std::vector<Rational> key;
        for (std::size_t part : tuple.parts) key.emplace_back(static_cast<long>(part));
        const HessenbergCompanion s = build_striped(p, tuple);
        out.add(Family::Striped, params, ReportSource::Oracle, condition_report(s.matrix()), key);
        if (!tuple.equal_parts()) continue;
        if (p.coeff(0) != 1) {
            out.skip(Family::Striped, params, ReportSource::ClosedForm, "closed form needs c_0 = 1");
            continue;
        }
        const std::size_t k = tuple.parts.front();
        const std::size_t m = tuple.parts.size() - 1;
        out.add(Family::Striped, params, ReportSource::ClosedForm,
                make_condition_report(unit_sparse_norm_sq(p), striped_inverse_norm_sq(p, k, m), ReportSource::ClosedForm),
                key);
    }
}

void generalized_rows(const MonicPolynomial& p, const AnalysisRequest& req, Collector& out) {
    const std::size_t n = p.degree();
    std::vector<std::size_t> ells;
    if (req.ell_range) {
        ells = *req.ell_range;
    } else if (n >= 5) {
        for (std::size_t ell = 3; ell + 2 <= n; ++ell) ells.push_back(ell);
    } else {
        out.skip(Family::Generalized, "-", ReportSource::Oracle, "needs n >= 5 so that 3 <= ell <= n-2");
        return;
    }
    for (std::size_t ell : ells) {
        try {
            MSpec{Rational(0), ell}.validate(n);
        } catch (const Error& e) {
            out.skip(Family::Generalized, "ell=" + std::to_string(ell), ReportSource::Oracle, reason_of(e));
            continue;
        }
        const std::vector<Rational> grid = req.a_grid ? *req.a_grid : default_a_grid(p, ell);
        for (const Rational& a : grid) {
            const MSpec spec{a, ell};
            const std::string params = spec.to_string();
            const std::vector<Rational> key{Rational(static_cast<long>(ell)), a};
            const MConditionFactors f = m_condition_factors(p, spec);
            out.add(Family::Generalized, params, ReportSource::Oracle, f.oracle, key);
            if (f.printed) {
                out.add(Family::Generalized, params, ReportSource::Printed, *f.printed, key);
            } else {
                out.skip(Family::Generalized, params, ReportSource::Printed, "printed formula needs c_0 = 1");
            }
        }
    }
}

bool better(const Row& a, const Row& b) {
    const Rational& ka = a.entry.values->kappa_sq;
    const Rational& kb = b.entry.values->kappa_sq;
    if (ka != kb) return ka < kb;
    if (a.entry.family != b.entry.family) return a.entry.family < b.entry.family;
    return std::lexicographical_compare(a.key.begin(), a.key.end(), b.key.begin(), b.key.end());
}

Candidate candidate_of(const ReportEntry& e) {
    return {e.family, e.params, e.values->kappa_sq, e.values->kappa_float};
}

}  // namespace

std::string_view family_name(Family family) {
    switch (family) {
        case Family::Frobenius: return "frobenius";
        case Family::Fiedler: return "fiedler";
        case Family::Striped: return "striped";
        case Family::Generalized: return "generalized";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : kFamilies) {
        if (family_name(f) == trim(name)) return f;
    }
    throw Error(ErrorCode::ParseError, "unknown family '" + std::string(name) +
                                           "' (expected frobenius, fiedler, striped or generalized)");
}

std::vector<Family> all_families() { return {std::begin(kFamilies), std::end(kFamilies)}; }

std::string_view format_name(OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Table: return "table";
        case OutputFormat::PlotData: return "plotdata";
    }
    return "?";
}

OutputFormat parse_format(std::string_view name) {
    for (OutputFormat f : {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Table, OutputFormat::PlotData}) {
        if (format_name(f) == name) return f;
    }
    throw Error(ErrorCode::ParseError, "unknown format '" + std::string(name) + "'");
}

MonicPolynomial parse_polynomial_text(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw Error(ErrorCode::ParseError, "empty coefficient input");
    if (text.front() == '{') return parse_json_document(text);
    return parse_list(text);
}

MonicPolynomial parse_input(const std::string& source) {
    if (source == "-") {
        const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
        return parse_polynomial_text(text);
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(source, ec)) {
        std::ifstream in(source, std::ios::binary);
        if (!in) throw Error(ErrorCode::IoError, "cannot read '" + source + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return parse_polynomial_text(buffer.str());
    }
    return parse_polynomial_text(source);
}

std::vector<std::size_t> parse_index_range(std::string_view text) {
    auto number = [&](std::string_view s) -> std::size_t {
        s = trim(s);
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw Error(ErrorCode::ParseError, "expected a non-negative integer, got '" + std::string(s) + "'");
        }
        return std::stoul(std::string(s));
    };
    std::vector<std::size_t> out;
    for (std::string_view part : split(text, ',')) {
        const std::size_t dots = part.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(number(part));
            continue;
        }
        const std::size_t lo = number(part.substr(0, dots));
        const std::size_t hi = number(part.substr(dots + 2));
        if (hi < lo) throw Error(ErrorCode::ParseError, "empty range '" + std::string(part) + "'");
        for (std::size_t i = lo; i <= hi; ++i) out.push_back(i);
    }
    return out;
}

AnalysisResult analyze(const AnalysisRequest& request) {
    if (request.families.empty()) throw Error(ErrorCode::NoFeasibleFamily, "no families requested");
    const MonicPolynomial& p = request.polynomial;
    require_degree(p, 2);

    std::vector<Family> families = request.families;
    std::sort(families.begin(), families.end());
    families.erase(std::unique(families.begin(), families.end()), families.end());

    Collector out;
    for (Family family : families) {
        if (p.coeff(0) == 0) {
            out.skip(family, "-", ReportSource::Oracle, "c_0 = 0 makes every companion matrix singular");
            continue;
        }
        switch (family) {
            case Family::Frobenius: frobenius_rows(p, out); break;
            case Family::Fiedler: fiedler_rows(p, request.fiedler_steps, out); break;
            case Family::Striped: striped_rows(p, request.stripe_tuples, out); break;
            case Family::Generalized: generalized_rows(p, request, out); break;
        }
    }

    std::vector<const Row*> ranked;
    for (const Row& row : out.rows()) {
        if (!row.entry.skipped() && row.entry.source == ReportSource::Oracle) ranked.push_back(&row);
    }
    if (ranked.empty()) {
        std::string why = "every requested family was skipped";
        for (const Row& row : out.rows()) {
            if (row.entry.skipped()) {
                why += "; " + std::string(family_name(row.entry.family)) + " " + row.entry.params + ": " +
                       *row.entry.skipped_reason;
            }
        }
        throw Error(ErrorCode::NoFeasibleFamily, why);
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const Row* a, const Row* b) { return better(*a, *b); });

    AnalysisResult result{p, {}, {}};
    result.recommendation.best = candidate_of(ranked.front()->entry);
    for (std::size_t i = 1; i < ranked.size(); ++i) result.recommendation.runners_up.push_back(candidate_of(ranked[i]->entry));
    result.recommendation.tie_break =
        "exact minimum of oracle kappa^2; ties prefer frobenius, fiedler, striped, generalized in that order, "
        "then the lexicographically smallest parameters";
    for (Row& row : out.rows()) result.reports.push_back(std::move(row.entry));
    return result;
}

}  // namespace compcond
