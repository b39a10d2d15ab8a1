// phigraph: exact maximum-average-degree toolkit with golden-ratio
// degree-product inequality checking.
//
// Exit codes: 0 success, 1 mathematical violation detected (check /
// certificate / eq1 / extremal), 2 input or evaluation error.

#include "phigraph/density.hpp"
#include "phigraph/extremal.hpp"
#include "phigraph/generators.hpp"
#include "phigraph/golden.hpp"
#include "phigraph/graph.hpp"
#include "phigraph/inequality.hpp"
#include "phigraph/orient.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace phigraph;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) { return Graph::from_edge_list(read_input(path)); }

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json report_to_json(const InequalityReport& r) {
    json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["k"] = r.k;
    j["lhs"] = r.lhs.str();
    j["rhs"] = r.rhs.str();
    j["ratio"] = r.ratio;
    j["holds"] = r.holds;
    j["precision"] = r.precision;
    j["hypothesis_verified"] =
        r.hypothesis_verified.has_value() ? json(*r.hypothesis_verified) : json(nullptr);
    return j;
}

json tightness_to_json(const TightnessReport& r) {
    json j;
    j["a"] = r.params.a;
    j["R"] = r.params.R;
    j["k"] = r.params.k;
    j["precision"] = r.precision;
    j["exact"] = r.exact;
    j["lhs"] = r.lhs_exact ? json(r.lhs_exact->str()) : json(nullptr);
    j["rhs"] = r.rhs_value ? json(r.rhs_value->str()) : json(nullptr);
    j["log10_lhs"] = r.log10_lhs.to_double();
    j["log10_rhs"] = r.log10_rhs.to_double();
    j["measured_ratio"] = r.measured_ratio;
    j["epsilon_bound"] = r.epsilon_bound;
    j["within_bound"] = r.within_bound;
    return j;
}

int run_mad(const std::string& input, const std::string& format) {
    Graph g = load_graph(input);
    Rational value = mad(g);
    if (format == "json") {
        DensityWitness w = max_density_exact(g);
        json j;
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["mad"] = value.str();
        j["mad_decimal"] = value.decimal_str(12);
        j["density"] = w.density.str();
        j["witness_size"] = w.subgraph.size();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << value.str() << " (" << value.decimal_str(12) << ")\n";
    }
    return 0;
}

int run_orient(const std::string& input, int k, const std::string& format) {
    Graph g = load_graph(input);
    auto o = orient_bounded_outdegree(g, k);
    if (format == "json") {
        json j;
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["k"] = k;
        j["possible"] = o.has_value();
        if (o) {
            json arcs = json::array();
            for (int e = 0; e < g.edge_count(); ++e)
                arcs.push_back(std::to_string(o->tail(e)) + " -> " + std::to_string(o->head(e)));
            j["arcs"] = arcs;
            j["max_outdegree"] = o->max_outdegree();
        }
        std::cout << j.dump() << "\n";
    } else {
        if (!o) {
            std::cout << "impossible\n";
        } else {
            std::cout << o->serialize();
        }
    }
    return 0;
}

int run_check(const std::string& input, int k, int precision, bool verify_hypothesis,
              const std::string& format) {
    Graph g = load_graph(input);
    InequalityReport r = check_main(g, k, precision);
    if (verify_hypothesis)
        r.hypothesis_verified = mad(g) <= Rational(BigInt(2 * k));
    if (format == "json") {
        std::cout << report_to_json(r).dump() << "\n";
    } else {
        std::cout << "n=" << r.n << " m=" << r.m << " k=" << r.k << "\n"
                  << "lhs = " << r.lhs.str() << "\n"
                  << "rhs = " << r.rhs.str() << "\n"
                  << "ratio = " << format_double(r.ratio) << "\n"
                  << "holds = " << (r.holds ? "true" : "false") << "\n";
        if (r.hypothesis_verified)
            std::cout << "hypothesis_verified = " << (*r.hypothesis_verified ? "true" : "false")
                      << "\n";
    }
    return r.holds ? 0 : kExitViolation;
}

int run_eq1(const std::string& input, const std::string& format) {
    Graph g = load_graph(input);
    CubedBoundReport r = check_cubed_bound(g);
    if (format == "json") {
        json j;
        j["n"] = r.n;
        j["m"] = r.m;
        j["lhs"] = r.lhs.str();
        j["rhs"] = r.rhs.str();
        j["holds"] = r.holds;
        j["equality"] = r.equality;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "lhs = " << r.lhs.str() << "\n"
                  << "rhs = " << r.rhs.str() << "\n"
                  << "holds = " << (r.holds ? "true" : "false") << "\n"
                  << "equality = " << (r.equality ? "true" : "false") << "\n";
    }
    return r.holds ? 0 : kExitViolation;
}

int run_certificate(const std::string& input, int k, int precision, const std::string& format) {
    Graph g = load_graph(input);
    auto o = orient_bounded_outdegree(g, k);
    if (!o) {
        std::cerr << "error: no orientation with outdegree <= " << k
                  << " exists (mad > 2k); certificate hypothesis unsatisfiable\n";
        return kExitInputError;
    }
    ArcCertificate cert = arc_certificate(g, *o, k, precision);
    bool ok = cert.all_hold && cert.lhs_consistent && cert.rhs_bounded;
    if (format == "csv") {
        std::cout << "tail,head,lhs_term,rhs_term,holds\n";
        for (const ArcRecord& rec : cert.arcs)
            std::cout << rec.tail << "," << rec.head << "," << rec.lhs_term.str(20) << ","
                      << rec.rhs_term.str(20) << "," << (rec.holds ? "true" : "false") << "\n";
    } else if (format == "json") {
        json j;
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["k"] = cert.k;
        j["precision"] = cert.precision;
        j["arcs"] = static_cast<int>(cert.arcs.size());
        j["all_hold"] = cert.all_hold;
        j["lhs_sum"] = cert.lhs_sum.str();
        j["rhs_sum"] = cert.rhs_sum.str();
        j["edge_product_sum"] = cert.edge_product.str();
        j["degree_power_sum"] = cert.degree_power.str();
        j["lhs_consistent"] = cert.lhs_consistent;
        j["rhs_bounded"] = cert.rhs_bounded;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "arcs = " << cert.arcs.size() << "\n"
                  << "all_hold = " << (cert.all_hold ? "true" : "false") << "\n"
                  << "lhs_consistent = " << (cert.lhs_consistent ? "true" : "false") << "\n"
                  << "rhs_bounded = " << (cert.rhs_bounded ? "true" : "false") << "\n";
    }
    return ok ? 0 : kExitViolation;
}

EvalMode parse_mode(const std::string& mode) {
    if (mode == "exact") return EvalMode::Exact;
    if (mode == "log") return EvalMode::LogDomain;
    return EvalMode::Auto;
}

int run_extremal(ExtremalParams params, bool has_epsilon, double epsilon, int precision,
                 bool materialize, const std::string& mode, const std::string& format) {
    if (has_epsilon) {
        params = choose_params(epsilon);
    }
    TightnessReport report = analytic_report(params, precision, parse_mode(mode));

    bool materialized_ok = true;
    long long tree_n = -1, tree_m = -1;
    if (materialize) {
        Graph tree = build_tree(ExtremalParams{params.a, params.R, 1, {}});
        tree_n = tree.vertex_count();
        tree_m = tree.edge_count();
        LevelProfile prof = level_profile(params, precision);
        BigInt total = 0;
        for (const BigInt& s : prof.sizes) total += s;
        materialized_ok = total == tree_n;
        BigInt lhs_tree = edge_product_sum(params.k > 1 ? blow_up(tree, params.k) : tree);
        materialized_ok = materialized_ok && report.lhs_exact && lhs_tree == *report.lhs_exact;
    }

    if (format == "json") {
        json j = tightness_to_json(report);
        if (has_epsilon) j["epsilon_target"] = epsilon;
        if (materialize) {
            j["materialized_n"] = tree_n;
            j["materialized_m"] = tree_m;
            j["materialized_consistent"] = materialized_ok;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "a=" << params.a << " R=" << params.R << " k=" << params.k << "\n";
        if (report.lhs_exact) std::cout << "lhs = " << report.lhs_exact->str() << "\n";
        if (report.rhs_value) std::cout << "rhs = " << report.rhs_value->str() << "\n";
        std::cout << "log10_lhs = " << format_double(report.log10_lhs.to_double()) << "\n"
                  << "log10_rhs = " << format_double(report.log10_rhs.to_double()) << "\n"
                  << "measured_ratio = " << format_double(report.measured_ratio) << "\n"
                  << "epsilon_bound = " << format_double(report.epsilon_bound) << "\n"
                  << "within_bound = " << (report.within_bound ? "true" : "false") << "\n";
        if (materialize)
            std::cout << "materialized_consistent = " << (materialized_ok ? "true" : "false")
                      << "\n";
    }
    return (report.within_bound && materialized_ok) ? 0 : kExitViolation;
}

int run_scan(const std::vector<int>& a_list, const std::vector<int>& R_list, int k,
             int precision, bool diagonal, const std::string& mode) {
    std::vector<std::pair<int, int>> grid;
    if (diagonal) {
        if (a_list.size() != R_list.size())
            throw std::invalid_argument("scan --diagonal: a-list and R-list sizes differ");
        for (std::size_t i = 0; i < a_list.size(); ++i)
            grid.emplace_back(a_list[i], R_list[i]);
    } else {
        for (int a : a_list)
            for (int R : R_list) grid.emplace_back(a, R);
    }
    std::cout << "a,R,k,log10_lhs,log10_rhs,ratio,epsilon_bound,within_bound\n";
    bool all_within = true;
    for (const auto& [a, R] : grid) {
        TightnessReport r =
            analytic_report(ExtremalParams{a, R, k, {}}, precision, parse_mode(mode));
        all_within = all_within && r.within_bound;
        std::cout << a << "," << R << "," << k << "," << format_double(r.log10_lhs.to_double())
                  << "," << format_double(r.log10_rhs.to_double()) << ","
                  << format_double(r.measured_ratio) << "," << format_double(r.epsilon_bound)
                  << "," << (r.within_bound ? "true" : "false") << "\n";
    }
    return all_within ? 0 : kExitViolation;
}

int run_blowup(const std::string& input, int k) {
    Graph g = load_graph(input);
    std::cout << blow_up(g, k).to_edge_list();
    return 0;
}

int run_gen(const std::string& type, int n, int k, double edge_prob, std::uint64_t seed) {
    Graph g;
    if (type == "tree") {
        g = random_tree(n, seed);
        std::cout << "# gen type=tree n=" << n << " seed=" << seed << "\n";
    } else if (type == "kdeg") {
        GenSpec spec{n, k, edge_prob, seed};
        g = random_k_degenerate(spec);
        std::cout << "# gen type=kdeg n=" << n << " k=" << k << " edge_prob="
                  << format_double(edge_prob) << " seed=" << seed << "\n";
    } else {
        throw std::invalid_argument("gen: unknown type '" + type + "'");
    }
    std::cout << g.to_edge_list();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact mad/orientation toolkit with golden-ratio degree-product checks"};
    app.require_subcommand(1);

    std::string input, format = "text", mode = "auto", gen_type = "tree";
    int k = 1, precision = kDefaultPrecision;
    bool verify_hypothesis = false, materialize = false, diagonal = false;
    int a = 4, R = 2;
    double epsilon = 0.0, edge_prob = 0.5;
    int n = 10;
    std::uint64_t seed = 0;
    std::vector<int> a_list, R_list;

    auto add_format = [&](CLI::App* cmd, bool csv = false) {
        cmd->add_option("--format", format,
                        csv ? "Output format: text|json|csv" : "Output format: text|json")
            ->default_val("text");
    };
    auto add_precision = [&](CLI::App* cmd) {
        cmd->add_option("--precision", precision, "Decimal digits for numeric evaluation")
            ->default_val(kDefaultPrecision)
            ->check(CLI::Range(30, 100000));
    };

    CLI::App* c_mad = app.add_subcommand("mad", "Exact maximum average degree");
    c_mad->add_option("input", input, "Edge-list file ('-' for stdin)")->required();
    add_format(c_mad);

    CLI::App* c_orient = app.add_subcommand("orient", "Bounded-outdegree orientation");
    c_orient->add_option("input", input)->required();
    c_orient->add_option("--k", k, "Outdegree bound")->required()->check(CLI::PositiveNumber);
    add_format(c_orient);

    CLI::App* c_check = app.add_subcommand("check", "Check the main degree-product inequality");
    c_check->add_option("input", input)->required();
    c_check->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    add_precision(c_check);
    c_check->add_flag("--verify-hypothesis", verify_hypothesis,
                      "Also verify mad(G) <= 2k via the density module");
    add_format(c_check);

    CLI::App* c_eq1 = app.add_subcommand("eq1", "Check the cubed-degree bound");
    c_eq1->add_option("input", input)->required();
    add_format(c_eq1);

    CLI::App* c_cert = app.add_subcommand("certificate", "Per-arc AM-GM certificate");
    c_cert->add_option("input", input)->required();
    c_cert->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    add_precision(c_cert);
    add_format(c_cert, true);

    CLI::App* c_ext = app.add_subcommand("extremal", "Tightness report for the tree family");
    c_ext->add_option("--a", a)->check(CLI::Range(4, 1000000000));
    c_ext->add_option("--R", R)->check(CLI::Range(2, 100000));
    c_ext->add_option("--k", k)->default_val(1)->check(CLI::PositiveNumber);
    CLI::Option* eps_opt =
        c_ext->add_option("--epsilon", epsilon, "Choose smallest (a,R) for this bound");
    add_precision(c_ext);
    c_ext->add_flag("--materialize", materialize, "Also build the tree and cross-check");
    c_ext->add_option("--mode", mode, "Evaluation mode: auto|exact|log")->default_val("auto");
    add_format(c_ext);

    CLI::App* c_scan = app.add_subcommand("scan", "CSV scan over (a, R) grid");
    c_scan->add_option("--a-list", a_list, "Values of a")->required()->delimiter(',');
    c_scan->add_option("--R-list", R_list, "Values of R")->required()->delimiter(',');
    c_scan->add_option("--k", k)->default_val(1)->check(CLI::PositiveNumber);
    add_precision(c_scan);
    c_scan->add_flag("--diagonal", diagonal, "Pair lists elementwise instead of product");
    c_scan->add_option("--mode", mode)->default_val("auto");

    CLI::App* c_blow = app.add_subcommand("blowup", "K_{k,k} blow-up of a graph");
    c_blow->add_option("input", input)->required();
    c_blow->add_option("--k", k)->required()->check(CLI::PositiveNumber);

    CLI::App* c_gen = app.add_subcommand("gen", "Generate random instances");
    c_gen->add_option("--type", gen_type, "tree | kdeg")->required();
    c_gen->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    c_gen->add_option("--k", k)->default_val(1)->check(CLI::PositiveNumber);
    c_gen->add_option("--edge-prob", edge_prob)->default_val(0.5)
        ->check(CLI::Range(0.0, 1.0));
    c_gen->add_option("--seed", seed)->default_val(0);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(c_mad)) return run_mad(input, format);
        if (app.got_subcommand(c_orient)) return run_orient(input, k, format);
        if (app.got_subcommand(c_check))
            return run_check(input, k, precision, verify_hypothesis, format);
        if (app.got_subcommand(c_eq1)) return run_eq1(input, format);
        if (app.got_subcommand(c_cert)) return run_certificate(input, k, precision, format);
        if (app.got_subcommand(c_ext))
            return run_extremal(ExtremalParams{a, R, k, {}}, eps_opt->count() > 0, epsilon,
                                precision, materialize, mode, format);
        if (app.got_subcommand(c_scan))
            return run_scan(a_list, R_list, k, precision, diagonal, mode);
        if (app.got_subcommand(c_blow)) return run_blowup(input, k);
        if (app.got_subcommand(c_gen)) return run_gen(gen_type, n, k, edge_prob, seed);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const MaterializeCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
