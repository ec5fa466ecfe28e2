#include "stardense/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stardense/bounds.hpp"
#include "stardense/classc.hpp"
#include "stardense/counting.hpp"
#include "stardense/crossover.hpp"
#include "stardense/function_oracle.hpp"
#include "stardense/numeric.hpp"
#include "stardense/search.hpp"
#include "stardense/step_graphon.hpp"
#include "stardense/threshold_graph.hpp"

namespace stardense::cli {

namespace {

using nlohmann::json;

struct GlobalOptions {
    std::uint64_t seed = 0;
    int threads = 1;
    std::string mode = "float";
    std::string format = "json";
    bool timing = false;
};

bool rational_mode(const GlobalOptions& g) { return g.mode == "rational"; }

std::string fmt_double(double v) {
    std::ostringstream out;
    out << std::setprecision(17) << v;
    return out.str();
}

double parse_gamma(const std::string& text) { return to_double(parse_rational(text)); }

// ---- JSON helpers ---------------------------------------------------------

json to_json(const bounds::BoundReport& r) {
    return {{"gamma", r.gamma},
            {"eta", r.eta},
            {"clique_branch", r.clique_branch},
            {"anticlique_branch", r.anticlique_branch},
            {"bound", r.bound},
            {"winner", bounds::winner_name(r.winner)}};
}

json to_json(const bounds::BoundReportQ& r) {
    return {{"gamma", format_rational(r.gamma)},
            {"eta", format_rational(r.eta)},
            {"clique_branch", format_rational(r.clique_branch)},
            {"anticlique_branch", format_rational(r.anticlique_branch)},
            {"bound", format_rational(r.bound)},
            {"winner", bounds::winner_name(r.winner)}};
}

json to_json(const classc::TripleCheck& t) {
    return {{"condition", t.condition == classc::Condition::C1 ? "C1" : "C2"},
            {"a", t.a},
            {"y", t.y},
            {"b", t.b},
            {"slope_residual", t.slope_residual},
            {"inequality_value", t.inequality_value}};
}

const char* verdict_name(classc::ScanVerdict v) {
    switch (v) {
        case classc::ScanVerdict::Consistent: return "consistent";
        case classc::ScanVerdict::Borderline: return "borderline";
        default: return "violation";
    }
}

// One fully assembled report to stdout.  JSON keys are emitted in sorted
// order, so output is byte-stable for a fixed command line.
void emit(const GlobalOptions& globals, const std::string& command, json inputs, json result,
          json checks = json::array()) {
    if (globals.format == "csv")
        throw std::invalid_argument("csv output is only available for gamma-k");
    if (globals.format == "text") {
        std::cout << command << "\n";
        for (auto it = result.begin(); it != result.end(); ++it)
            std::cout << "  " << it.key() << ": " << it.value().dump() << "\n";
        for (const auto& check : checks)
            std::cout << "  [" << (check.at("pass").get<bool>() ? "pass" : "FAIL") << "] "
                      << check.at("name").get<std::string>() << ": expected "
                      << check.at("expected").get<std::string>() << ", computed "
                      << check.at("computed").get<std::string>() << "\n";
        return;
    }
    json doc{{"command", command},
             {"inputs", std::move(inputs)},
             {"result", std::move(result)},
             {"checks", std::move(checks)}};
    std::cout << doc.dump(2) << "\n";
}

// ---- graphon I/O ----------------------------------------------------------

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open graphon file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Accept either a bare {"alpha": ..., "beta": ...} object or a full report
// produced by `graphon make`, whose result field holds the graphon.
std::string read_graphon_payload(const std::string& path) {
    const std::string text = read_text(path);
    const json doc = json::parse(text);
    if (doc.is_object() && doc.contains("result") && doc.at("result").contains("alpha"))
        return doc.at("result").dump();
    return text;
}

// ---- subcommand bodies ----------------------------------------------------

void run_bound(const GlobalOptions& globals, int k, const std::string& gamma_text) {
    const auto report = bounds::star_bound(k, parse_gamma(gamma_text));
    emit(globals, "bound", {{"k", k}, {"gamma", gamma_text}}, to_json(report));
}

void run_fbound(const GlobalOptions& globals, const std::string& fspec,
                const std::string& gamma_text) {
    const auto f = parse_function_spec(fspec);
    json inputs{{"f", fspec}, {"gamma", gamma_text}, {"mode", globals.mode}};
    if (rational_mode(globals)) {
        auto result = to_json(bounds::f_bound_exact(f, parse_rational(gamma_text)));
        result["f"] = f.description();
        emit(globals, "fbound", std::move(inputs), std::move(result));
        return;
    }
    auto result = to_json(bounds::f_bound(f, parse_gamma(gamma_text)));
    result["f"] = f.description();
    emit(globals, "fbound", std::move(inputs), std::move(result));
}

graphs::ThresholdGraph build_named_graph(const std::string& construction, int n, long long m) {
    if (construction == "quasi-complete")
        return graphs::quasi_complete(n, m);
    if (construction == "quasi-star")
        return graphs::quasi_star(n, m);
    if (construction == "witness") {
        if (n != 13 || m != 61)
            throw std::invalid_argument("the stored witness graph exists only at n=13, m=61");
        return graphs::extremal_witness_13_61();
    }
    throw std::invalid_argument("unknown construction: " + construction);
}

void run_count(const GlobalOptions& globals, const std::string& construction, int n, long long m,
               int k) {
    const auto g = build_named_graph(construction, n, m);
    const auto report = graphs::make_count_report(g, k);
    emit(globals, "count",
         {{"construction", construction}, {"n", n}, {"m", m}, {"k", k}},
         {{"n", report.n},
          {"m", report.m},
          {"k", report.k},
          {"creation", g.to_string()},
          {"star_count", report.star_count.str()},
          {"moment", report.moment.str()}});
}

void run_search(const GlobalOptions& globals, int n, long long m, int k,
                const std::string& objective_text, bool brute, int max_n) {
    const auto objective = objective_text == "degree-moment" ? search::Objective::DegreeMoment
                                                             : search::Objective::StarCount;
    json inputs{{"n", n},       {"m", m},           {"k", k},
                {"objective", objective_text}, {"brute_force", brute}, {"threads", globals.threads}};
    if (brute) {
        const auto r = search::brute_force_max(n, m, k, objective, max_n);
        json edges = json::array();
        for (const auto& [u, v] : r.witness_edges)
            edges.push_back(json::array({u, v}));
        json result{{"n", r.n},
                    {"m", r.m},
                    {"k", r.k},
                    {"objective", search::objective_name(r.objective)},
                    {"max_value", r.max_value.str()},
                    {"witness_edges", std::move(edges)},
                    {"explored", r.explored}};
        if (globals.timing)
            result["elapsed_seconds"] = r.elapsed_seconds;
        emit(globals, "search", std::move(inputs), std::move(result));
        return;
    }
    const auto r = search::max_over_threshold(n, m, k, objective, globals.threads);
    json witnesses = json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back(w.to_string());
    json result{{"n", r.n},
                {"m", r.m},
                {"k", r.k},
                {"objective", search::objective_name(r.objective)},
                {"max_value", r.max_value.str()},
                {"witnesses", std::move(witnesses)},
                {"explored", r.explored}};
    if (globals.timing)
        result["elapsed_seconds"] = r.elapsed_seconds;
    emit(globals, "search", std::move(inputs), std::move(result));
}

struct GraphonMakeArgs {
    std::string kind;
    std::string gamma = "0";
    std::string y = "0";
    std::string z = "0";
    int parts = 4;
};

void run_graphon_make(const GlobalOptions& globals, const GraphonMakeArgs& args) {
    json inputs{{"kind", args.kind}, {"mode", globals.mode}};
    std::string payload;
    if (args.kind == "clique" || args.kind == "anticlique") {
        const auto kind = args.kind == "clique" ? graphons::ExtremalKind::Clique
                                                : graphons::ExtremalKind::Anticlique;
        inputs["gamma"] = args.gamma;
        payload = rational_mode(globals)
                      ? graphons::graphon_to_json(
                            graphons::extremal_graphon_exact(kind, parse_rational(args.gamma)))
                      : graphons::graphon_to_json(
                            graphons::extremal_graphon(kind, parse_gamma(args.gamma)));
    } else if (args.kind == "l-shaped") {
        inputs["y"] = args.y;
        inputs["z"] = args.z;
        payload = rational_mode(globals)
                      ? graphons::graphon_to_json(
                            graphons::l_shaped(parse_rational(args.y), parse_rational(args.z)))
                      : graphons::graphon_to_json(graphons::l_shaped<double>(
                            parse_gamma(args.y), parse_gamma(args.z)));
    } else if (args.kind == "random") {
        if (rational_mode(globals))
            throw std::invalid_argument("random graphons are float-mode only");
        inputs["gamma"] = args.gamma;
        inputs["parts"] = args.parts;
        inputs["seed"] = globals.seed;
        payload = graphons::graphon_to_json(
            graphons::random_step_graphon(args.parts, parse_gamma(args.gamma), globals.seed));
    } else {
        throw std::invalid_argument("unknown graphon kind: " + args.kind);
    }
    emit(globals, "graphon", std::move(inputs), json::parse(payload));
}

void run_graphon_eval(const GlobalOptions& globals, const std::string& file, int k,
                      const std::string& fspec) {
    const std::string text = read_graphon_payload(file);
    json inputs{{"file", file}, {"k", k}, {"mode", globals.mode}};
    if (!fspec.empty())
        inputs["f"] = fspec;
    json result;
    if (rational_mode(globals)) {
        const auto w = graphons::graphon_q_from_json(text);
        result["edge_density"] = format_rational(graphons::edge_density(w));
        result["star_density"] = format_rational(graphons::star_density(w, k));
        json degrees = json::array();
        for (const auto& d : w.part_degrees())
            degrees.push_back(format_rational(d));
        result["part_degrees"] = std::move(degrees);
        if (!fspec.empty())
            result["f_functional"] =
                format_rational(graphons::f_functional(w, parse_function_spec(fspec)));
    } else {
        const auto w = graphons::graphon_from_json(text);
        result["edge_density"] = graphons::edge_density(w);
        result["star_density"] = graphons::star_density(w, k);
        result["part_degrees"] = w.part_degrees();
        if (!fspec.empty())
            result["f_functional"] = graphons::f_functional(w, parse_function_spec(fspec));
    }
    emit(globals, "graphon", std::move(inputs), std::move(result));
}

void run_graphon_transform(const GlobalOptions& globals, const std::string& file,
                           const std::string& op, const std::string& lambda_text) {
    const std::string text = read_graphon_payload(file);
    json inputs{{"file", file}, {"op", op}, {"mode", globals.mode}};
    if (op == "corner-zero" || op == "corner-one")
        inputs["lambda"] = lambda_text;
    auto apply = [&](const auto& w, const auto& lambda) {
        if (op == "complement")
            return graphons::complement(w);
        if (op == "corner-zero")
            return graphons::corner(w, lambda, graphons::CornerKind::Zero);
        if (op == "corner-one")
            return graphons::corner(w, lambda, graphons::CornerKind::One);
        throw std::invalid_argument("unknown graphon transform: " + op);
    };
    const std::string payload =
        rational_mode(globals)
            ? graphons::graphon_to_json(
                  apply(graphons::graphon_q_from_json(text), parse_rational(lambda_text)))
            : graphons::graphon_to_json(
                  apply(graphons::graphon_from_json(text), parse_gamma(lambda_text)));
    emit(globals, "graphon", std::move(inputs), json::parse(payload));
}

void run_graphon_good(const GlobalOptions& globals, const std::string& file,
                      const std::string& fspec) {
    const std::string text = read_graphon_payload(file);
    const auto f = parse_function_spec(fspec);
    json inputs{{"file", file}, {"f", fspec}, {"mode", globals.mode}};
    json result;
    if (rational_mode(globals)) {
        const auto verdict = bounds::is_good(graphons::graphon_q_from_json(text), f);
        result = {{"holds", verdict.holds},
                  {"slack", format_rational(verdict.slack)},
                  {"bound", to_json(verdict.report)}};
    } else {
        const auto verdict = bounds::is_good(graphons::graphon_from_json(text), f);
        result = {{"holds", verdict.holds},
                  {"slack", verdict.slack},
                  {"bound", to_json(verdict.report)}};
    }
    emit(globals, "graphon", std::move(inputs), std::move(result));
}

void run_classc_scan(const GlobalOptions& globals, const std::string& fspec, int grid) {
    const auto report = classc::membership_scan(parse_function_spec(fspec), grid);
    json result{{"grid", report.grid},
                {"c1_found", report.c1_found},
                {"c2_found", report.c2_found},
                {"any", report.any},
                {"verdict", verdict_name(report.verdict)}};
    if (report.any) {
        result["min_value"] = report.min_value;
        result["min_triple"] = to_json(report.min_triple);
    }
    if (report.violation)
        result["violation"] = to_json(*report.violation);
    emit(globals, "classc", {{"op", "scan"}, {"f", fspec}, {"grid", grid}}, std::move(result));
}

void run_classc_poly(const GlobalOptions& globals, int m, const std::string& x_text,
                     bool allow_below_one) {
    const Rational x = parse_rational(x_text);
    const Rational value = classc::auxiliary_poly_value(m, x, allow_below_one);
    emit(globals, "classc",
         {{"op", "poly"}, {"m", m}, {"x", x_text}},
         {{"m", m},
          {"x", format_rational(x)},
          {"value", format_rational(value)},
          {"nonnegative", value >= 0}});
}

void run_classc_jcheck(const GlobalOptions& globals, const std::string& fspec,
                       const std::string& gamma_text, int samples) {
    const auto report =
        classc::j_boundary_check(parse_function_spec(fspec), parse_gamma(gamma_text), samples);
    emit(globals, "classc",
         {{"op", "jcheck"}, {"f", fspec}, {"gamma", gamma_text}, {"samples", samples}},
         {{"holds", report.holds},
          {"worst_t", report.worst_t},
          {"worst_excess", report.worst_excess},
          {"boundary_max", report.boundary_max},
          {"eta", report.eta},
          {"sqrt_gamma", report.sqrt_gamma}});
}

// Accepts "7", "2..12", or "50,100,200,400".
std::vector<int> parse_k_spec(const std::string& text) {
    std::vector<int> ks;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi)
            throw std::invalid_argument("empty k range: " + text);
        for (int k = lo; k <= hi; ++k)
            ks.push_back(k);
        return ks;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        ks.push_back(std::stoi(item));
    if (ks.empty())
        throw std::invalid_argument("no k values in: " + text);
    return ks;
}

void run_gamma_k(const GlobalOptions& globals, const std::string& k_spec, double tol) {
    const auto ks = parse_k_spec(k_spec);
    json inputs{{"k", k_spec}, {"tol", tol}};
    if (globals.format == "csv") {
        const auto rows = crossover::asymptote_table(ks);
        std::cout << "k, eps_k, gamma_k, k2_one_minus_gamma, deviation_from_alpha_sq\n";
        for (const auto& row : rows)
            std::cout << row.k << ", " << fmt_double(row.eps) << ", " << fmt_double(row.gamma)
                      << ", " << fmt_double(row.k2_one_minus_gamma) << ", "
                      << fmt_double(row.deviation_from_alpha_sq) << "\n";
        return;
    }
    if (ks.size() == 1) {
        const auto r = crossover::find_crossover(ks.front(), tol);
        emit(globals, "gamma-k", std::move(inputs),
             {{"k", r.k},
              {"eps_k", r.eps},
              {"gamma_k", r.gamma},
              {"residual", r.residual},
              {"bracket_width", r.bracket_width()}});
        return;
    }
    json rows = json::array();
    for (const auto& row : crossover::asymptote_table(ks))
        rows.push_back({{"k", row.k},
                        {"eps_k", row.eps},
                        {"gamma_k", row.gamma},
                        {"k2_one_minus_gamma", row.k2_one_minus_gamma},
                        {"deviation_from_alpha_sq", row.deviation_from_alpha_sq}});
    emit(globals, "gamma-k", std::move(inputs), {{"rows", std::move(rows)}});
}

void run_alpha(const GlobalOptions& globals, double tol) {
    const double alpha = crossover::alpha_constant(tol);
    emit(globals, "alpha", {{"tol", tol}},
         {{"alpha", alpha}, {"residual", std::fabs(0.5 * alpha + std::exp(-alpha) - 1)}});
}

// The two-hinge piecewise-linear function used by the stock reproduction
// rows: 0 on [0, 1/5], rising to 1 at 3/5, then to 3 at 1.
FunctionOracle ramp() {
    return FunctionOracle::piecewise_linear(
        {{Rational(0), Rational(0)},
         {Rational(1, 5), Rational(0)},
         {Rational(3, 5), Rational(1)},
         {Rational(1), Rational(3)}});
}

int run_reproduce(const GlobalOptions& globals) {
    json checks = json::array();
    bool all_pass = true;
    auto add_check = [&](const std::string& name, const std::string& expected,
                         const std::string& computed, bool pass) {
        checks.push_back(
            {{"name", name}, {"expected", expected}, {"computed", computed}, {"pass", pass}});
        all_pass = all_pass && pass;
    };
    auto exact = [&](const std::string& name, const std::string& expected,
                     const std::string& computed) {
        add_check(name, expected, computed, expected == computed);
    };

    // Star counts and degree moments of the three n=13, m=61 candidates.
    const auto qc = graphs::quasi_complete(13, 61);
    const auto qs = graphs::quasi_star(13, 61);
    const auto witness = graphs::extremal_witness_13_61();
    exact("stars3_quasi_complete_13_61", "1610", graphs::count_stars(qc, 3).str());
    exact("stars3_quasi_star_13_61", "1620", graphs::count_stars(qs, 3).str());
    exact("stars3_witness_13_61", "1622", graphs::count_stars(witness, 3).str());
    exact("moment3_quasi_complete_13_61", "13202", graphs::degree_moment(qc, 3).str());
    exact("moment3_quasi_star_13_61", "13172", graphs::degree_moment(qs, 3).str());
    exact("moment3_witness_13_61", "13238", graphs::degree_moment(witness, 3).str());

    const auto star_max =
        search::max_over_threshold(13, 61, 3, search::Objective::StarCount, globals.threads);
    exact("search_stars3_max_13_61", "1622", star_max.max_value.str());
    const auto moment_max =
        search::max_over_threshold(13, 61, 3, search::Objective::DegreeMoment, globals.threads);
    exact("search_moment3_max_13_61", "13238", moment_max.max_value.str());

    // Crossover densities and the asymptotic constant.
    const auto g2 = crossover::find_crossover(2);
    add_check("gamma_2", "0.5 within 1e-10", fmt_double(g2.gamma),
              std::fabs(g2.gamma - 0.5) <= 1e-10);
    const auto g3 = crossover::find_crossover(3);
    add_check("gamma_3", "0.75 within 1e-10", fmt_double(g3.gamma),
              std::fabs(g3.gamma - 0.75) <= 1e-10);
    double worst_branch_gap = 0;
    for (int k = 2; k <= 12; ++k) {
        const auto r = crossover::find_crossover(k);
        const double eta = 1 - std::sqrt(1 - r.gamma);
        const double clique = std::pow(r.gamma, 0.5 * (k + 1));
        const double anticlique = eta + (1 - eta) * ipow(eta, unsigned(k));
        worst_branch_gap = std::max(worst_branch_gap, std::fabs(clique - anticlique));
    }
    add_check("branch_equality_at_gamma_k_k2_12", "<= 1e-10", fmt_double(worst_branch_gap),
              worst_branch_gap <= 1e-10);
    const double alpha = crossover::alpha_constant(1e-10);
    add_check("alpha_4dp", "rounds to 1.5936", fmt_double(alpha),
              std::floor(alpha * 1e4 + 0.5) == 15936.0);

    // Exact rational evaluation of the two-hinge ramp at density 9/25.
    const auto f = ramp();
    const auto fb = bounds::f_bound_exact(f, Rational(9, 25));
    exact("ramp_fbound_9_25", "3/5", format_rational(fb.bound));
    const auto corner_w = graphons::l_shaped(Rational(2, 5), Rational(1, 4));
    exact("ramp_functional_l_shaped", "5/8", format_rational(graphons::f_functional(corner_w, f)));
    const auto verdict = bounds::is_good(corner_w, f);
    exact("ramp_goodness_slack", "-1/40", format_rational(verdict.slack));
    add_check("ramp_goodness_holds", "false", verdict.holds ? "true" : "false", !verdict.holds);

    std::size_t passed = 0;
    for (const auto& check : checks)
        if (check.at("pass").get<bool>())
            ++passed;
    emit(globals, "reproduce", json::object(),
         {{"total", checks.size()}, {"passed", passed}, {"failed", checks.size() - passed}},
         checks);
    return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("stardense");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const auto& s : full)
        argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), const_cast<char**>(argv.data()));
}

int run(int argc, char** argv) {
    GlobalOptions globals;
    CLI::App app{"Star-density extremal toolkit: exact star/moment maxima over graphs "
                 "with a fixed number of edges, step-graphon densities, spectral-free "
                 "two-branch bounds, and crossover-density root finding."};
    app.require_subcommand(1);
    app.add_option("--seed", globals.seed, "Seed for randomized constructions (default 0)");
    app.add_option("--threads", globals.threads, "Worker threads for searches (default 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--mode", globals.mode, "Arithmetic mode: float or rational")
        ->check(CLI::IsMember({"float", "rational"}));
    app.add_option("--format", globals.format, "Output format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--timing", globals.timing, "Include elapsed-seconds fields in reports");

    int exit_code = 0;
    auto guard = [&](auto&& body) {
        return [&globals, &exit_code, body] {
            try {
                exit_code = body(globals);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                exit_code = 1;
            }
        };
    };

    // bound K GAMMA
    {
        auto* cmd = app.add_subcommand("bound", "Two-branch star-density bound at density gamma");
        auto k = std::make_shared<int>(0);
        auto gamma = std::make_shared<std::string>();
        cmd->add_option("k", *k, "Star exponent (k >= 1)")->required();
        cmd->add_option("gamma", *gamma, "Edge density in [0,1], decimal or p/q")->required();
        cmd->callback(guard([k, gamma](const GlobalOptions& g) {
            run_bound(g, *k, *gamma);
            return 0;
        }));
    }

    // fbound FSPEC GAMMA
    {
        auto* cmd = app.add_subcommand("fbound", "Two-branch functional bound for a convex F");
        auto fspec = std::make_shared<std::string>();
        auto gamma = std::make_shared<std::string>();
        cmd->add_option("f", *fspec, "Function spec: power:k or pwl:x0,y0;x1,y1;...")->required();
        cmd->add_option("gamma", *gamma, "Edge density in [0,1], decimal or p/q")->required();
        cmd->callback(guard([fspec, gamma](const GlobalOptions& g) {
            run_fbound(g, *fspec, *gamma);
            return 0;
        }));
    }

    // count CONSTRUCTION N M K
    {
        auto* cmd = app.add_subcommand("count", "Star count and degree moment of a named graph");
        auto construction = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto m = std::make_shared<long long>(0);
        auto k = std::make_shared<int>(0);
        cmd->add_option("construction", *construction, "quasi-complete, quasi-star, or witness")
            ->required()
            ->check(CLI::IsMember({"quasi-complete", "quasi-star", "witness"}));
        cmd->add_option("n", *n, "Vertex count")->required();
        cmd->add_option("m", *m, "Edge count")->required();
        cmd->add_option("k", *k, "Star exponent")->required();
        cmd->callback(guard([construction, n, m, k](const GlobalOptions& g) {
            run_count(g, *construction, *n, *m, *k);
            return 0;
        }));
    }

    // search N M K [--objective ...] [--brute-force] [--max-n 8]
    {
        auto* cmd = app.add_subcommand("search", "Exact maximum over graphs with n vertices, m edges");
        auto n = std::make_shared<int>(0);
        auto m = std::make_shared<long long>(0);
        auto k = std::make_shared<int>(0);
        auto objective = std::make_shared<std::string>("star-count");
        auto brute = std::make_shared<bool>(false);
        auto max_n = std::make_shared<int>(7);
        cmd->add_option("n", *n, "Vertex count")->required();
        cmd->add_option("m", *m, "Edge count")->required();
        cmd->add_option("k", *k, "Star exponent")->required();
        cmd->add_option("--objective", *objective, "star-count or degree-moment")
            ->check(CLI::IsMember({"star-count", "degree-moment"}));
        cmd->add_flag("--brute-force", *brute,
                      "Check against every labeled graph instead of the shifted family");
        cmd->add_option("--max-n", *max_n, "Raise the brute-force vertex cap (max 8)");
        cmd->callback(guard([n, m, k, objective, brute, max_n](const GlobalOptions& g) {
            run_search(g, *n, *m, *k, *objective, *brute, *max_n);
            return 0;
        }));
    }

    // graphon make|eval|transform|good
    {
        auto* cmd = app.add_subcommand("graphon", "Build, evaluate, or transform step graphons");
        cmd->require_subcommand(1);

        auto make_args = std::make_shared<GraphonMakeArgs>();
        auto* make = cmd->add_subcommand("make", "Construct a named step graphon");
        make->add_option("kind", make_args->kind, "clique, anticlique, l-shaped, or random")
            ->required()
            ->check(CLI::IsMember({"clique", "anticlique", "l-shaped", "random"}));
        make->add_option("--gamma", make_args->gamma, "Edge density (clique, anticlique, random)");
        make->add_option("--y", make_args->y, "First part measure (l-shaped)");
        make->add_option("--z", make_args->z, "Second part measure (l-shaped)");
        make->add_option("--parts", make_args->parts, "Part count (random)");
        make->callback(guard([make_args](const GlobalOptions& g) {
            run_graphon_make(g, *make_args);
            return 0;
        }));

        auto eval_file = std::make_shared<std::string>("-");
        auto eval_k = std::make_shared<int>(1);
        auto eval_f = std::make_shared<std::string>();
        auto* eval = cmd->add_subcommand("eval", "Densities of a JSON step graphon");
        eval->add_option("file", *eval_file, "Graphon JSON file, or - for stdin");
        eval->add_option("--k", *eval_k, "Star exponent for star_density");
        eval->add_option("--f", *eval_f, "Optional function spec for the F-functional");
        eval->callback(guard([eval_file, eval_k, eval_f](const GlobalOptions& g) {
            run_graphon_eval(g, *eval_file, *eval_k, *eval_f);
            return 0;
        }));

        auto tr_file = std::make_shared<std::string>("-");
        auto tr_op = std::make_shared<std::string>();
        auto tr_lambda = std::make_shared<std::string>("0");
        auto* transform = cmd->add_subcommand("transform", "Rewrite a JSON step graphon");
        transform->add_option("op", *tr_op, "complement, corner-zero, or corner-one")
            ->required()
            ->check(CLI::IsMember({"complement", "corner-zero", "corner-one"}));
        transform->add_option("file", *tr_file, "Graphon JSON file, or - for stdin");
        transform->add_option("--lambda", *tr_lambda, "Corner part measure in [0,1)");
        transform->callback(guard([tr_file, tr_op, tr_lambda](const GlobalOptions& g) {
            run_graphon_transform(g, *tr_file, *tr_op, *tr_lambda);
            return 0;
        }));

        auto good_file = std::make_shared<std::string>("-");
        auto good_f = std::make_shared<std::string>();
        auto* good = cmd->add_subcommand("good", "Does the F-bound dominate the F-functional?");
        good->add_option("file", *good_file, "Graphon JSON file, or - for stdin");
        good->add_option("--f", *good_f, "Function spec")->required();
        good->callback(guard([good_file, good_f](const GlobalOptions& g) {
            run_graphon_good(g, *good_file, *good_f);
            return 0;
        }));
    }

    // classc scan|poly|jcheck
    {
        auto* cmd = app.add_subcommand("classc", "Curvature-condition checks for convex F");
        cmd->require_subcommand(1);

        auto scan_f = std::make_shared<std::string>();
        auto scan_grid = std::make_shared<int>(50);
        auto* scan = cmd->add_subcommand("scan", "Solve both conditions over a parameter grid");
        scan->add_option("f", *scan_f, "Function spec")->required();
        scan->add_option("--grid", *scan_grid, "Grid resolution (parameters at multiples of 1/g)");
        scan->callback(guard([scan_f, scan_grid](const GlobalOptions& g) {
            run_classc_scan(g, *scan_f, *scan_grid);
            return 0;
        }));

        auto poly_m = std::make_shared<int>(0);
        auto poly_x = std::make_shared<std::string>();
        auto poly_allow = std::make_shared<bool>(false);
        auto* poly = cmd->add_subcommand("poly", "Exact auxiliary polynomial value");
        poly->add_option("m", *poly_m, "Degree parameter (m >= 0)")->required();
        poly->add_option("x", *poly_x, "Evaluation point, decimal or p/q")->required();
        poly->add_flag("--allow-below-one", *poly_allow, "Permit x < 1");
        poly->callback(guard([poly_m, poly_x, poly_allow](const GlobalOptions& g) {
            run_classc_poly(g, *poly_m, *poly_x, *poly_allow);
            return 0;
        }));

        auto j_f = std::make_shared<std::string>();
        auto j_gamma = std::make_shared<std::string>();
        auto j_samples = std::make_shared<int>(1000);
        auto* jcheck = cmd->add_subcommand("jcheck", "Boundary test for the J-functional");
        jcheck->add_option("f", *j_f, "Function spec")->required();
        jcheck->add_option("gamma", *j_gamma, "Edge density strictly inside (0,1)")->required();
        jcheck->add_option("--samples", *j_samples, "Sample count across [eta, sqrt(gamma)]");
        jcheck->callback(guard([j_f, j_gamma, j_samples](const GlobalOptions& g) {
            run_classc_jcheck(g, *j_f, *j_gamma, *j_samples);
            return 0;
        }));
    }

    // gamma-k SPEC [--tol]
    {
        auto* cmd = app.add_subcommand("gamma-k", "Crossover densities gamma_k");
        auto spec = std::make_shared<std::string>();
        auto tol = std::make_shared<double>(1e-13);
        cmd->add_option("k", *spec, "Single k, a range lo..hi, or a comma list")->required();
        cmd->add_option("--tol", *tol, "Bisection bracket width");
        cmd->callback(guard([spec, tol](const GlobalOptions& g) {
            run_gamma_k(g, *spec, *tol);
            return 0;
        }));
    }

    // alpha [--tol]
    {
        auto* cmd = app.add_subcommand("alpha", "Asymptotic constant alpha ~ 1.5936");
        auto tol = std::make_shared<double>(1e-12);
        cmd->add_option("--tol", *tol, "Bisection bracket width");
        cmd->callback(guard([tol](const GlobalOptions& g) {
            run_alpha(g, *tol);
            return 0;
        }));
    }

    // reproduce
    {
        auto* cmd = app.add_subcommand(
            "reproduce", "Recompute the headline numbers and verify them against stored values");
        cmd->callback(guard([](const GlobalOptions& g) { return run_reproduce(g); }));
    }

    // Let --mode/--format/--seed/... appear after the subcommand too.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
        for (auto* sub : node->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // exits 0 after printing help
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the usage diagnostic
        return 2;
    }
    return exit_code;
}

}  // namespace stardense::cli
