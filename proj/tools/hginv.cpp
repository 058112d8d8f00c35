// Command-line frontend for the hypergeometric-group / Euler-form toolkit.
//
// Subcommands:
//   analyze     run every construction and verification, emit a full report
//   stokes      print the Stokes matrix of the restricted dual collection
//   gram        print the restricted Euler-form Gram matrix and its rank
//   invariants  print the invariant-space dimension, generator, and scalar
//   verify-ode  check the series solutions against the operator order by order
//
// Input is either --q/--d (comma-separated positive integers with equal sums)
// or --case-file with one [[case]] table per case.  Output is text or JSON
// (--format), to stdout or --out.  Exit codes: 0 all requested checks pass,
// 1 a verification failed, 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hginv/case_file.hpp"
#include "hginv/report.hpp"

namespace {

using hginv::json;

struct Options {
    std::string q_arg;
    std::string d_arg;
    int truncation = 12;
    std::string case_file;
    std::string format = "text";
    std::string out_path;
};

std::vector<int> parse_int_list(const std::string& arg, const std::string& flag) {
    std::vector<int> out;
    std::stringstream body(arg);
    std::string token;
    while (std::getline(body, token, ',')) {
        try {
            std::size_t pos = 0;
            int value = std::stoi(token, &pos);
            if (pos != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            throw std::invalid_argument(flag + ": expected comma-separated integers, got '" +
                                        arg + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(flag + ": empty list");
    return out;
}

std::vector<hginv::CaseSpec> resolve_cases(const Options& opt) {
    if (!opt.case_file.empty()) {
        if (!opt.q_arg.empty() || !opt.d_arg.empty())
            throw std::invalid_argument("--case-file cannot be combined with --q/--d");
        std::vector<hginv::CaseSpec> cases = hginv::load_case_file(opt.case_file);
        for (hginv::CaseSpec& spec : cases)
            if (opt.truncation != 12) spec.truncation = opt.truncation;
        return cases;
    }
    if (opt.q_arg.empty() || opt.d_arg.empty())
        throw std::invalid_argument("provide --q and --d, or --case-file");
    hginv::CaseSpec spec;
    spec.q = parse_int_list(opt.q_arg, "--q");
    spec.d = parse_int_list(opt.d_arg, "--d");
    spec.truncation = opt.truncation;
    spec.name = "(" + hginv::join_ints(spec.q) + ";" + hginv::join_ints(spec.d) + ")";
    return {spec};
}

void add_common_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--q", opt.q_arg, "weights, comma-separated (e.g. 1,1,1,1,1)");
    cmd->add_option("--d", opt.d_arg, "degrees, comma-separated (e.g. 5)");
    cmd->add_option("--truncation", opt.truncation, "series order for the ODE check")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--case-file", opt.case_file, "file with [[case]] tables (name/q/d)");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", opt.out_path, "write output to this path instead of stdout");
}

void emit(const Options& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output path: " + opt.out_path);
    out << payload;
}

// Render one JSON object per case, as an array iff the input was a case file
// (batch), so single ad-hoc runs stay a plain object.
std::string render_json(const std::vector<json>& objects, bool batch) {
    if (batch) {
        json arr = json::array();
        for (const json& j : objects) arr.push_back(j);
        return arr.dump(2) + "\n";
    }
    return objects.front().dump(2) + "\n";
}

struct CommandResult {
    std::vector<json> objects;
    std::string text;
    bool all_pass = true;
};

CommandResult run_analyze(const std::vector<hginv::CaseSpec>& cases) {
    CommandResult result;
    for (const hginv::CaseSpec& spec : cases) {
        hginv::Report rep = hginv::run_case(spec);
        result.objects.push_back(hginv::report_json(rep));
        result.text += hginv::report_text(rep);
        result.all_pass = result.all_pass && rep.all_pass;
    }
    return result;
}

CommandResult run_stokes(const std::vector<hginv::CaseSpec>& cases) {
    CommandResult result;
    for (const hginv::CaseSpec& spec : cases) {
        hginv::CIData data = hginv::build_data(spec.q, spec.d);
        hginv::CollectionMatrices cm = hginv::collection_matrices(data);
        hginv::IntMatrix s = hginv::stokes_matrix(data, cm);
        json j;
        j["name"] = spec.name;
        j["q"] = data.q;
        j["d"] = data.d;
        j["S"] = hginv::matrix_json(s);
        result.objects.push_back(std::move(j));
        result.text += "case " + spec.name + ": S =\n" + hginv::matrix_text(s, "  ");
    }
    return result;
}

CommandResult run_gram(const std::vector<hginv::CaseSpec>& cases) {
    CommandResult result;
    for (const hginv::CaseSpec& spec : cases) {
        hginv::CIData data = hginv::build_data(spec.q, spec.d);
        hginv::CollectionMatrices cm = hginv::collection_matrices(data);
        hginv::RestrictedGram rg = hginv::restricted_gram(data, cm);
        hginv::ExponentSpectrum spectrum = hginv::exponent_spectrum(data);
        json j;
        j["name"] = spec.name;
        j["q"] = data.q;
        j["d"] = data.d;
        j["Q_red"] = spectrum.Q_red;
        j["xbar_rank"] = hginv::rank(rg.Xbar);
        j["Xbar"] = hginv::matrix_json(rg.Xbar);
        result.objects.push_back(std::move(j));
        result.text += "case " + spec.name + ": Q_red = " + std::to_string(spectrum.Q_red) +
                       ", rank(Xbar) = " + std::to_string(hginv::rank(rg.Xbar)) + ", Xbar =\n" +
                       hginv::matrix_text(rg.Xbar, "  ");
    }
    return result;
}

CommandResult run_invariants(const std::vector<hginv::CaseSpec>& cases) {
    CommandResult result;
    for (const hginv::CaseSpec& spec : cases) {
        hginv::CIData data = hginv::build_data(spec.q, spec.d);
        hginv::GroupGenerators gens = hginv::generators(data);
        hginv::InvariantSpace space = hginv::invariant_space(gens);
        hginv::RestrictedGram rg =
            hginv::restricted_gram(data, hginv::collection_matrices(data));
        hginv::TheoremVerification tv = hginv::verify_theorem(space, rg);
        json j;
        j["name"] = spec.name;
        j["q"] = data.q;
        j["d"] = data.d;
        j["dimension"] = space.dimension;
        j["generator"] = space.generator ? hginv::matrix_json(*space.generator) : json(nullptr);
        j["scalar"] = tv.report.pass ? json(hginv::to_string(tv.scalar)) : json(nullptr);
        result.objects.push_back(std::move(j));
        result.text +=
            "case " + spec.name + ": dimension = " + std::to_string(space.dimension) + "\n";
        if (space.generator)
            result.text += "  generator =\n" + hginv::matrix_text(*space.generator, "    ");
        if (tv.report.pass)
            result.text += "  Xbar = " + hginv::to_string(tv.scalar) + " * generator\n";
    }
    return result;
}

CommandResult run_verify_ode(const std::vector<hginv::CaseSpec>& cases) {
    CommandResult result;
    for (const hginv::CaseSpec& spec : cases) {
        hginv::CIData data = hginv::build_data(spec.q, spec.d);
        hginv::ExponentSpectrum spectrum = hginv::exponent_spectrum(data);
        json j;
        j["name"] = spec.name;
        j["q"] = data.q;
        j["d"] = data.d;
        j["truncation"] = spec.truncation;
        json families = json::array();
        bool case_pass = true;
        result.text += "case " + spec.name + " (truncation " +
                       std::to_string(spec.truncation) + "):\n";
        for (const hginv::ExponentRecord& rec : spectrum.exponents) {
            hginv::FrobeniusFamily fam =
                hginv::build_family(data, rec.rho, rec.mu, spec.truncation);
            hginv::OdeVerification v = hginv::verify_ode(fam, data);
            case_pass = case_pass && v.pass;
            families.push_back(json{{"rho", hginv::to_string(rec.rho)},
                                    {"mu", rec.mu},
                                    {"pass", v.pass},
                                    {"first_failure", v.first_failure}});
            result.text += "  exponent " + hginv::to_string(rec.rho) + " (mu " +
                           std::to_string(rec.mu) + "): " + (v.pass ? "pass" : "FAIL at order " +
                           std::to_string(v.first_failure)) + "\n";
        }
        j["families"] = std::move(families);
        j["pass"] = case_pass;
        result.objects.push_back(std::move(j));
        result.all_pass = result.all_pass && case_pass;
    }
    return result;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for hypergeometric monodromy groups and "
                 "Euler-form Gram matrices of complete-intersection data (q; d)"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* analyze = app.add_subcommand("analyze", "full pipeline with every verification");
    CLI::App* stokes = app.add_subcommand("stokes", "Stokes matrix of the dual collection");
    CLI::App* gram = app.add_subcommand("gram", "restricted Euler-form Gram matrix");
    CLI::App* invariants = app.add_subcommand("invariants", "quadratic invariant space");
    CLI::App* verify_ode = app.add_subcommand("verify-ode", "order-by-order series check");
    for (CLI::App* cmd : {analyze, stokes, gram, invariants, verify_ode})
        add_common_options(cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::vector<hginv::CaseSpec> cases = resolve_cases(opt);
        CommandResult result;
        if (analyze->parsed())
            result = run_analyze(cases);
        else if (stokes->parsed())
            result = run_stokes(cases);
        else if (gram->parsed())
            result = run_gram(cases);
        else if (invariants->parsed())
            result = run_invariants(cases);
        else
            result = run_verify_ode(cases);
        const bool batch = !opt.case_file.empty();
        emit(opt, opt.format == "json" ? render_json(result.objects, batch) : result.text);
        return result.all_pass ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
}
