// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. All mathematics lives behind the C API in
// libnplc; this binary only assembles config JSON, forwards it, and
// renders the reports.

#include <nplc/nplc.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

int status_to_exit(nplc_status st) {
    switch (st) {
        case NPLC_OK: return 0;
        case NPLC_VERIFICATION_FAILED: return 1;
        default: return 2;
    }
}

struct OutputOptions {
    std::string format = "json";
    std::string output_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format: json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--output", opts.output_path, "Write the JSON report to a file instead of stdout");
}

void emit(const std::string& body, const OutputOptions& opts) {
    if (!opts.output_path.empty()) {
        std::ofstream out(opts.output_path);
        out << body << "\n";
    } else {
        std::cout << body << "\n";
    }
}

std::string render_text(const std::string& command, const Json& rep) {
    std::ostringstream os;
    os << "nplc " << command << " (v" << rep.at("tool").at("version").get<std::string>() << ")\n";
    if (rep.contains("error")) {
        os << "error: " << rep.at("error").get<std::string>() << "\n";
        return os.str();
    }
    if (command == "newton") {
        os << "axis condition: " << (rep.at("axis_condition").get<bool>() ? "holds" : "fails") << "\n";
        os << "vertices:";
        for (const auto& v : rep.at("polyhedron").at("vertices")) os << " " << v.dump();
        os << "\nfacets:\n";
        for (const auto& f : rep.at("polyhedron").at("facets"))
            os << "  <" << f.at("normal").dump() << ", r> >= " << f.at("height").get<std::int64_t>()
               << (f.at("compact").get<bool>() ? "  (compact)" : "") << "\n";
        os << "compact faces: " << rep.at("compact_faces").size() << "\n";
        if (rep.contains("delta1")) {
            os << "Delta_1 (axis " << rep.at("delta1").at("axis").get<int>() << "):\n";
            for (const auto& f : rep.at("delta1").at("facets"))
                os << "  <" << f.at("normal").dump() << ", r> >= " << f.at("height").get<std::int64_t>() << "\n";
        }
    } else if (command == "resolve") {
        os << "rays: " << rep.at("sigma0").at("rays").size() << " -> " << rep.at("sigma").at("rays").size() << "\n";
        os << "cones: " << rep.at("sigma0").at("cones").size() << " -> " << rep.at("sigma").at("cones").size() << "\n";
        os << "max multiplicity before: " << rep.at("max_multiplicity_before").get<std::string>() << "\n";
        os << "star subdivisions: " << rep.at("subdivisions").get<std::uint64_t>() << "\n";
        os << "regular: " << (rep.at("regular").get<bool>() ? "yes" : "NO") << ", refines input: "
           << (rep.at("refines_input").get<bool>() ? "yes" : "NO") << ", covers the orthant: "
           << (rep.at("support_orthant").get<bool>() ? "yes" : "no") << "\n";
    } else if (command == "check") {
        for (const auto& r : rep.at("results")) {
            os << (r.at("passed").get<bool>() ? "[pass] " : "[FAIL] ") << r.at("name").get<std::string>();
            if (r.contains("nondegeneracy"))
                os << "  (nondegeneracy: " << r.at("nondegeneracy").at("status").get<std::string>() << ")";
            os << "\n";
        }
        os << "rounding exhaustion: " << (rep.at("rounding").at("passed").get<bool>() ? "pass" : "FAIL") << "\n";
        os << (rep.at("all_passed").get<bool>() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    } else if (command == "extend") {
        for (const auto& row : rep.at("rays")) {
            os << (row.at("pass").get<bool>() ? "  ok   " : "  FAIL ") << row.at("type").get<std::string>() << " "
               << row.at("ray").dump();
            if (row.contains("nu_form"))
                os << "  order " << row.at("nu_form").get<std::string>() << " >= " << row.at("threshold").get<std::string>();
            else
                os << "  nu_H " << row.at("nu_H").get<std::string>() << " >= " << row.at("required").get<std::string>();
            os << "\n";
        }
        os << rep.at("verdict").get<std::string>() << "\n";
    }
    return os.str();
}

int run(const std::string& command, const Json& config, const OutputOptions& opts) {
    char* report = nullptr;
    nplc_status st = nplc_run(command.c_str(), config.dump().c_str(), &report);
    if (!report) {
        std::cerr << "nplc: " << nplc_last_error() << "\n";
        return status_to_exit(st == NPLC_OK ? NPLC_ERROR_INTERNAL : st);
    }
    std::string body(report);
    nplc_string_free(report);
    if (opts.format == "text") {
        emit(render_text(command, Json::parse(body)), opts);
    } else {
        emit(body, opts);
    }
    if (st != NPLC_OK && st != NPLC_VERIFICATION_FAILED) std::cerr << "nplc: " << nplc_last_error() << "\n";
    return status_to_exit(st);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton-polyhedral analysis of hypersurface singularities: exact polyhedra, "
                 "dual fans, unimodular subdivisions, nondegeneracy search, filtration and "
                 "log-form checks"};
    app.require_subcommand(1);

    std::string poly_text, fan_path, corpus_path, f_text, h_text, base_text;
    int nvars = 0, axis = 0;
    std::int64_t m = 1;
    std::uint64_t seed = 0;
    std::int64_t a_max = 3, k_max = 3, m_max = 3, cutoff = 8;
    std::uint64_t trials = 100, norm_trials = 50;
    std::vector<std::uint32_t> primes;
    OutputOptions newton_opts, resolve_opts, check_opts, extend_opts;

    auto* newton = app.add_subcommand("newton", "Newton polyhedron, compact faces and the Delta_1 relaxation");
    newton->add_option("--poly", poly_text, "Polynomial in x1..xn")->required();
    newton->add_option("--nvars", nvars, "Number of variables")->required();
    newton->add_option("--delta1-axis", axis, "Also emit the Delta_1 relaxation for this axis (1-based)");
    newton->add_option("--seed", seed, "Seed recorded in the report");
    add_output_flags(newton, newton_opts);

    auto* resolve = app.add_subcommand("resolve", "Dual fan and its unimodular refinement");
    resolve->add_option("--poly", poly_text, "Polynomial in x1..xn");
    resolve->add_option("--nvars", nvars, "Number of variables");
    resolve->add_option("--fan", fan_path, "Regularize a fan from a JSON file instead");
    resolve->add_option("--seed", seed, "Seed recorded in the report");
    add_output_flags(resolve, resolve_opts);

    auto* check = app.add_subcommand("check", "Nondegeneracy, injectivity/divisibility sweeps, log-form "
                                              "equivalence, normalization round-trips, rounding exhaustion");
    check->add_option("--poly", poly_text, "Polynomial in x1..xn");
    check->add_option("--nvars", nvars, "Number of variables");
    check->add_option("--corpus", corpus_path, "JSON file with [{\"poly\": ..., \"nvars\": ...}, ...]");
    check->add_option("--a-max", a_max, "Largest dilation in the injectivity sweep");
    check->add_option("--k-max", k_max, "Largest ideal power in the injectivity sweep");
    check->add_option("--m-max", m_max, "Largest form level in the equivalence sweep");
    check->add_option("--cutoff", cutoff, "Total-degree cutoff for the monomial sweep");
    check->add_option("--trials", trials, "Randomized multiplication trials per polynomial");
    check->add_option("--normalization-trials", norm_trials, "Randomized normalization round-trips per level");
    check->add_option("--primes", primes, "Finite-field primes for the nondegeneracy scan");
    check->add_option("--seed", seed, "Seed for the randomized harnesses");
    add_output_flags(check, check_opts);

    auto* extend = app.add_subcommand("extend", "Log-pole extension check for a 1-parameter deformation "
                                                "(last variable is the parameter)");
    extend->add_option("--F", f_text, "Deformation polynomial F(x, t), t = last variable")->required();
    extend->add_option("--H", h_text, "Candidate extension numerator H(x, t)")->required();
    extend->add_option("--nvars", nvars, "Number of variables including t")->required();
    extend->add_option("--m", m, "Form level");
    extend->add_option("--base", base_text, "Expected F(x, 0), cross-checked");
    extend->add_option("--seed", seed, "Seed recorded in the report");
    add_output_flags(extend, extend_opts);

    CLI11_PARSE(app, argc, argv);

    Json config;
    config["seed"] = seed;

    if (newton->parsed()) {
        config["poly"] = poly_text;
        config["nvars"] = nvars;
        if (axis != 0) config["delta1_axis"] = axis;
        return run("newton", config, newton_opts);
    }
    if (resolve->parsed()) {
        if (!fan_path.empty()) {
            std::ifstream in(fan_path);
            if (!in) {
                std::cerr << "nplc: cannot open fan file '" << fan_path << "'\n";
                return 2;
            }
            Json fan = Json::parse(in, nullptr, false);
            if (fan.is_discarded()) {
                std::cerr << "nplc: malformed fan file '" << fan_path << "'\n";
                return 2;
            }
            config["fan"] = fan;
        } else if (!poly_text.empty()) {
            config["poly"] = poly_text;
            config["nvars"] = nvars;
        } else {
            std::cerr << "nplc: resolve needs --poly/--nvars or --fan\n";
            return 2;
        }
        return run("resolve", config, resolve_opts);
    }
    if (check->parsed()) {
        if (!corpus_path.empty()) {
            config["corpus_file"] = corpus_path;
        } else if (!poly_text.empty()) {
            config["poly"] = poly_text;
            config["nvars"] = nvars;
        } else {
            std::cerr << "nplc: check needs --poly/--nvars or --corpus\n";
            return 2;
        }
        config["a_max"] = a_max;
        config["k_max"] = k_max;
        config["m_max"] = m_max;
        config["cutoff"] = cutoff;
        config["trials"] = trials;
        config["normalization_trials"] = norm_trials;
        if (!primes.empty()) config["primes"] = primes;
        return run("check", config, check_opts);
    }
    if (extend->parsed()) {
        config["F"] = f_text;
        config["H"] = h_text;
        config["nvars"] = nvars;
        config["m"] = m;
        if (!base_text.empty()) config["base"] = base_text;
        return run("extend", config, extend_opts);
    }
    return 2;
}
