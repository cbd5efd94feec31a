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

#include "compcond/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "compcond/error.hpp"
#include "json.hpp"

namespace compcond {

namespace {

using nlohmann::json;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

json candidate_json(const Candidate& c) {
    return {{"family", family_name(c.family)},
            {"params", c.params},
            {"kappa_sq", to_string(c.kappa_sq)},
            {"kappa_float", c.kappa_float}};
}

Candidate candidate_from(const json& j) {
    Candidate c;
    c.family = parse_family(j.at("family").get<std::string>());
    c.params = j.at("params").get<std::string>();
    c.kappa_sq = parse_rational(j.at("kappa_sq").get<std::string>());
    c.kappa_float = j.at("kappa_float").get<double>();
    return c;
}

ReportSource parse_source(const std::string& name) {
    for (ReportSource s : {ReportSource::Oracle, ReportSource::ClosedForm, ReportSource::Printed}) {
        if (source_name(s) == name) return s;
    }
    throw Error(ErrorCode::ParseError, "unknown report source '" + name + "'");
}

std::string to_json(const AnalysisResult& r) {
    json doc;
    json coeffs = json::array();
    for (const Rational& c : r.polynomial.coeffs()) coeffs.push_back(to_string(c));
    doc["polynomial"] = {{"degree", r.polynomial.degree()}, {"order", "ascending"}, {"coeffs", coeffs}};
    json reports = json::array();
    for (const ReportEntry& e : r.reports) {
        json j = {{"family", family_name(e.family)}, {"params", e.params}, {"source", source_name(e.source)}};
        if (e.values) {
            j["norm_sq"] = to_string(e.values->norm_sq);
            j["inv_norm_sq"] = to_string(e.values->inv_norm_sq);
            j["kappa_sq"] = to_string(e.values->kappa_sq);
            j["kappa_float"] = e.values->kappa_float;
        }
        if (e.skipped_reason) j["skipped_reason"] = *e.skipped_reason;
        reports.push_back(std::move(j));
    }
    doc["reports"] = std::move(reports);
    json rec = candidate_json(r.recommendation.best);
    json runners = json::array();
    for (const Candidate& c : r.recommendation.runners_up) runners.push_back(candidate_json(c));
    rec["runners_up"] = std::move(runners);
    rec["tie_break"] = r.recommendation.tie_break;
    doc["recommendation"] = std::move(rec);
    return doc.dump(2) + "\n";
}

/// Rows keyed by (family, params) in first-appearance order.
struct Grouped {
    Family family;
    std::string params;
    const ReportEntry* oracle = nullptr;
    const ReportEntry* closed = nullptr;
    const ReportEntry* printed = nullptr;
    std::vector<std::string> notes;
};

std::vector<Grouped> group(const AnalysisResult& r) {
    std::vector<Grouped> rows;
    std::map<std::pair<Family, std::string>, std::size_t> index;
    for (const ReportEntry& e : r.reports) {
        auto key = std::make_pair(e.family, e.params);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, rows.size()).first;
            rows.push_back({e.family, e.params, nullptr, nullptr, nullptr, {}});
        }
        Grouped& g = rows[it->second];
        if (e.skipped()) {
            g.notes.push_back(std::string(source_name(e.source)) + ": " + *e.skipped_reason);
            continue;
        }
        switch (e.source) {
            case ReportSource::Oracle: g.oracle = &e; break;
            case ReportSource::ClosedForm: g.closed = &e; break;
            case ReportSource::Printed: g.printed = &e; break;
        }
    }
    return rows;
}

std::string joined(const std::vector<std::string>& notes) {
    std::string out;
    for (const std::string& n : notes) out += (out.empty() ? "" : "; ") + n;
    return out;
}

std::string kappa_of(const ReportEntry* e) { return e ? to_string(e->values->kappa_sq) : std::string(); }

std::string to_csv(const AnalysisResult& r) {
    std::ostringstream out;
    out << "family,params,norm_sq,inv_norm_sq,kappa_sq,kappa_float,closed_form_kappa_sq,printed_kappa_sq,skipped_reason\n";
    for (const Grouped& g : group(r)) {
        out << family_name(g.family) << ',' << csv_cell(g.params) << ',';
        if (g.oracle) {
            const ConditionReport& v = *g.oracle->values;
            out << to_string(v.norm_sq) << ',' << to_string(v.inv_norm_sq) << ',' << to_string(v.kappa_sq) << ','
                << fmt(v.kappa_float);
        } else {
            out << ",,,";
        }
        out << ',' << kappa_of(g.closed) << ',' << kappa_of(g.printed) << ',' << csv_cell(joined(g.notes)) << '\n';
    }
    return out.str();
}

std::string to_table(const AnalysisResult& r) {
    std::vector<std::vector<std::string>> cells{
        {"family", "params", "kappa^2 (oracle)", "kappa", "closed form", "printed", "notes"}};
    for (const Grouped& g : group(r)) {
        cells.push_back({std::string(family_name(g.family)), g.params, kappa_of(g.oracle),
                         g.oracle ? fmt(g.oracle->values->kappa_float) : "", kappa_of(g.closed), kappa_of(g.printed),
                         joined(g.notes)});
    }
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream out;
    out << "p(x) = " << r.polynomial.to_string() << "\n\n";
    for (std::size_t k = 0; k < cells.size(); ++k) {
        std::string line;
        for (std::size_t i = 0; i < cells[k].size(); ++i) {
            std::string cell = cells[k][i];
            if (i + 1 < cells[k].size()) cell.resize(width[i], ' ');
            line += (i ? "  " : "") + cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
        if (k == 0) {
            std::size_t total = 0;
            for (std::size_t w : width) total += w;
            out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
        }
    }
    const Candidate& best = r.recommendation.best;
    out << "\nrecommendation: " << family_name(best.family) << ' ' << best.params << "  kappa^2 = "
        << to_string(best.kappa_sq) << "  kappa ~ " << fmt(best.kappa_float) << '\n';
    out << "tie-break: " << r.recommendation.tie_break << '\n';
    return out.str();
}

std::string to_plotdata(const AnalysisResult& r) {
    std::ostringstream out;
    out << "# index family params kappa kappa_sq\n";
    std::size_t index = 0;
    for (const ReportEntry& e : r.reports) {
        if (e.skipped() || e.source != ReportSource::Oracle) continue;
        out << index++ << ' ' << family_name(e.family) << ' ' << e.params << ' ' << fmt(e.values->kappa_float) << ' '
            << to_string(e.values->kappa_sq) << '\n';
    }
    return out.str();
}

}  // namespace

std::string emit_report(const AnalysisResult& result, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: return to_json(result);
        case OutputFormat::Csv: return to_csv(result);
        case OutputFormat::Table: return to_table(result);
        case OutputFormat::PlotData: return to_plotdata(result);
    }
    return {};
}

AnalysisResult reports_from_json(const std::string& text) {
    try {
        const json doc = json::parse(text);
        std::vector<Rational> coeffs;
        for (const auto& c : doc.at("polynomial").at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
        AnalysisResult r{MonicPolynomial(std::move(coeffs)), {}, {}};
        for (const auto& j : doc.at("reports")) {
            ReportEntry e;
            e.family = parse_family(j.at("family").get<std::string>());
            e.params = j.at("params").get<std::string>();
            e.source = parse_source(j.at("source").get<std::string>());
            if (j.contains("skipped_reason")) e.skipped_reason = j["skipped_reason"].get<std::string>();
            if (j.contains("kappa_sq")) {
                ConditionReport v = make_condition_report(parse_rational(j.at("norm_sq").get<std::string>()),
                                                          parse_rational(j.at("inv_norm_sq").get<std::string>()), e.source);
                if (v.kappa_sq != parse_rational(j.at("kappa_sq").get<std::string>())) {
                    throw Error(ErrorCode::ParseError, "kappa_sq != norm_sq * inv_norm_sq for " + e.params);
                }
                v.family = std::string(family_name(e.family));
                v.params = e.params;
                v.kappa_float = j.at("kappa_float").get<double>();
                e.values = std::move(v);
            }
            r.reports.push_back(std::move(e));
        }
        const json& rec = doc.at("recommendation");
        r.recommendation.best = candidate_from(rec);
        for (const auto& c : rec.at("runners_up")) r.recommendation.runners_up.push_back(candidate_from(c));
        r.recommendation.tie_break = rec.at("tie_break").get<std::string>();
        return r;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad report document: ") + e.what());
    }
}

std::string emit_perturbation(std::size_t n, std::size_t ell, const std::vector<PerturbationReport>& rows,
                              OutputFormat format) {
    const double target = 1.0 / std::sqrt(2.0);
    auto ratio = [](const Rational& sq) { return std::sqrt(to_double(sq)); };
    auto over_t = [&](const PerturbationReport& r, const Rational& sq) {
        return r.t == 0 ? std::nan("") : ratio(sq) / std::abs(to_double(r.t));
    };
    std::ostringstream out;
    switch (format) {
        case OutputFormat::Json: {
            json doc = {{"n", n}, {"ell", ell}, {"target_ratio_over_t", target}};
            json list = json::array();
            for (const PerturbationReport& r : rows) {
                json j = {{"t", to_string(r.t)},
                          {"kappa_f_sq", to_string(r.kappa_f_sq)},
                          {"kappa_m_sq_oracle", to_string(r.kappa_m_oracle_sq)},
                          {"kappa_m_sq_printed", to_string(r.kappa_m_printed_sq)},
                          {"ratio_sq_oracle", to_string(r.ratio_sq_oracle)},
                          {"ratio_sq_printed", to_string(r.ratio_sq_printed)}};
                if (r.scaled_oracle) j["scaled_oracle"] = *r.scaled_oracle;
                if (r.scaled_printed) j["scaled_printed"] = *r.scaled_printed;
                list.push_back(std::move(j));
            }
            doc["cases"] = std::move(list);
            return doc.dump(2) + "\n";
        }
        case OutputFormat::Csv:
            out << "t,kappa_f_sq,kappa_m_sq_oracle,kappa_m_sq_printed,ratio_oracle,ratio_over_t_oracle,ratio_over_t_printed\n";
            for (const PerturbationReport& r : rows) {
                out << to_string(r.t) << ',' << to_string(r.kappa_f_sq) << ',' << to_string(r.kappa_m_oracle_sq) << ','
                    << to_string(r.kappa_m_printed_sq) << ',' << fmt(ratio(r.ratio_sq_oracle)) << ','
                    << fmt(over_t(r, r.ratio_sq_oracle)) << ',' << fmt(over_t(r, r.ratio_sq_printed)) << '\n';
            }
            return out.str();
        case OutputFormat::Table:
            out << "n = " << n << ", ell = " << ell << ", target ratio/t = " << fmt(target) << '\n';
            for (const PerturbationReport& r : rows) {
                out << "t = " << to_string(r.t) << "  kappa(F)/kappa(M) = " << fmt(ratio(r.ratio_sq_oracle))
                    << "  ratio/t = " << fmt(over_t(r, r.ratio_sq_oracle)) << " (oracle), "
                    << fmt(over_t(r, r.ratio_sq_printed)) << " (printed)\n";
            }
            return out.str();
        case OutputFormat::PlotData:
            out << "# n=" << n << " ell=" << ell << " target=" << fmt(target) << '\n';
            out << "# t ratio_oracle ratio_over_t_oracle ratio_over_t_printed\n";
            for (const PerturbationReport& r : rows) {
                out << to_string(r.t) << ' ' << fmt(ratio(r.ratio_sq_oracle)) << ' ' << fmt(over_t(r, r.ratio_sq_oracle))
                    << ' ' << fmt(over_t(r, r.ratio_sq_printed)) << '\n';
            }
            return out.str();
    }
    return {};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    out << text;
    if (!out.flush()) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

}  // namespace compcond
