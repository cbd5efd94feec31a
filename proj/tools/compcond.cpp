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

// Command line front end: analyze, enumerate, verify, perturb.
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "compcond/analyzer.hpp"
#include "compcond/error.hpp"
#include "compcond/fiedler.hpp"
#include "compcond/generalized.hpp"
#include "compcond/report.hpp"
#include "compcond/striped.hpp"
#include "compcond/verify.hpp"

namespace {

using namespace compcond;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::ParseError:
        case ErrorCode::DegreeTooSmall:
        case ErrorCode::InvalidTuple: return kExitParse;
        case ErrorCode::NoFeasibleFamily:
        case ErrorCode::BadEll: return kExitInfeasible;
        default: return kExitFailure;
    }
}

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct AnalyzeArgs {
    std::string poly;
    std::string families;
    std::string a_grid;
    std::string ell_range;
    std::string steps;
    std::string tuples;
    std::string format = "json";
    std::string out;
};

int run_analyze(const AnalyzeArgs& args) {
    AnalysisRequest req{parse_input(args.poly)};
    if (!args.families.empty()) {
        req.families.clear();
        for (const std::string& f : split_list(args.families, ',')) req.families.push_back(parse_family(f));
    }
    if (!args.a_grid.empty()) {
        std::vector<Rational> grid;
        for (const std::string& a : split_list(args.a_grid, ',')) grid.push_back(parse_rational(a));
        req.a_grid = std::move(grid);
    }
    if (!args.ell_range.empty()) req.ell_range = parse_index_range(args.ell_range);
    if (!args.steps.empty()) req.fiedler_steps = parse_index_range(args.steps);
    if (!args.tuples.empty()) {
        std::vector<StripeTuple> tuples;
        for (const std::string& t : split_list(args.tuples, ';')) tuples.push_back(StripeTuple::parse(t));
        req.stripe_tuples = std::move(tuples);
    }
    req.format = parse_format(args.format);
    write_output(args.out, emit_report(analyze(req), req.format));
    return kExitOk;
}

int run_enumerate(std::size_t n, const std::string& family) {
    if (n < 2) throw Error(ErrorCode::DegreeTooSmall, "n must be at least 2");
    std::ostringstream out;
    if (family == "fiedler") {
        out << "# path m step_size\n";
        for (const LatticePath& path : all_lattice_paths(n)) {
            out << path.to_string() << ' ' << path.rights() << ' ' << path.step_size() << '\n';
        }
    } else if (family == "striped") {
        out << "# tuple stripes equal_parts\n";
        for (const StripeTuple& t : valid_stripe_tuples(n)) {
            out << t.to_string() << ' ' << t.parts.size() << ' ' << (t.equal_parts() ? "yes" : "no") << '\n';
        }
    } else {
        throw Error(ErrorCode::ParseError, "enumerate supports --family fiedler or striped, got '" + family + "'");
    }
    write_output("", out.str());
    return kExitOk;
}

int run_perturb(std::size_t n, std::size_t ell, const std::string& ts, const std::string& format, const std::string& path) {
    std::vector<PerturbationReport> rows;
    for (const std::string& t : split_list(ts, ',')) rows.push_back(perturbation_case(n, ell, parse_rational(t)));
    write_output(path, emit_perturbation(n, ell, rows, parse_format(format)));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Condition numbers of companion matrices in exact arithmetic"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "Compare companion families for one polynomial");
    analyze_cmd->add_option("--poly", analyze_args.poly, "Coefficient file, '-' for stdin, or inline list/JSON")->required();
    analyze_cmd->add_option("--families", analyze_args.families, "Comma list of frobenius,fiedler,striped,generalized");
    analyze_cmd->add_option("--a-grid", analyze_args.a_grid, "Comma list of a values for the generalized family");
    analyze_cmd->add_option("--ell-range", analyze_args.ell_range, "ell values, e.g. 3..5");
    analyze_cmd->add_option("--steps", analyze_args.steps, "Fiedler step sizes, e.g. 1..3");
    analyze_cmd->add_option("--tuples", analyze_args.tuples, "Stripe tuples separated by ';', e.g. '3,3,3;4,3,2'");
    analyze_cmd->add_option("--format", analyze_args.format, "json, csv, table or plotdata")
        ->check(CLI::IsMember({"json", "csv", "table", "plotdata"}));
    analyze_cmd->add_option("--out", analyze_args.out, "Output path (default stdout)");

    std::size_t enum_n = 0;
    std::string enum_family;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List lattice paths or stripe tuples");
    enumerate_cmd->add_option("--n", enum_n, "Degree")->required();
    enumerate_cmd->add_option("--family", enum_family, "fiedler or striped")->required();

    std::uint64_t seed = 1;
    std::size_t n_max = 6;
    std::size_t trials = 50;
    std::size_t probes = 20;
    std::string verify_out;
    auto* verify_cmd = app.add_subcommand("verify", "Run the randomized property suite");
    verify_cmd->add_option("--seed", seed, "Random seed");
    verify_cmd->add_option("--n-max", n_max, "Largest degree");
    verify_cmd->add_option("--trials", trials, "Draws per property");
    verify_cmd->add_option("--probes", probes, "Instances in the second-factor probe");
    verify_cmd->add_option("--out", verify_out, "Output path (default stdout)");

    std::size_t pert_n = 7;
    std::size_t pert_ell = 3;
    std::string pert_t = "10,100,1000";
    std::string pert_format = "table";
    std::string pert_out;
    auto* perturb_cmd = app.add_subcommand("perturb", "Perturbation family sweep over t");
    perturb_cmd->add_option("--n", pert_n, "Degree");
    perturb_cmd->add_option("--ell", pert_ell, "ell");
    perturb_cmd->add_option("--t", pert_t, "Comma list of t values");
    perturb_cmd->add_option("--format", pert_format, "json, csv, table or plotdata")
        ->check(CLI::IsMember({"json", "csv", "table", "plotdata"}));
    perturb_cmd->add_option("--out", pert_out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*analyze_cmd) return run_analyze(analyze_args);
        if (*enumerate_cmd) return run_enumerate(enum_n, enum_family);
        if (*verify_cmd) {
            const VerifyReport report = verify_suite(seed, n_max, trials, probes);
            write_output(verify_out, report.to_text());
            return report.all_passed() ? kExitOk : kExitFailure;
        }
        if (*perturb_cmd) return run_perturb(pert_n, pert_ell, pert_t, pert_format, pert_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}
