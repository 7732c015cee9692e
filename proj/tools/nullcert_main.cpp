#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nullcert/enumcert.hpp"
#include "nullcert/errors.hpp"
#include "nullcert/json_io.hpp"

namespace {

using namespace nullcert;

constexpr int kExitNoCertificate = 1;
constexpr int kExitInputError = 2;
constexpr int kExitRefused = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write '" + path + "'");
    out << text;
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_file(path);
    if (format == "dimacs") return Graph::parse_dimacs(text);
    return Graph::parse_edge_list(text);
}

struct ProblemArgs {
    std::string graph_path;
    std::string format = "edgelist";
    std::string problem;
    std::string target_path;
    std::string form = "subset";
    long m = -1;
    int k = 0;
    bool full_pairwise = false;
};

void add_problem_options(CLI::App* cmd, ProblemArgs& a, bool need_graph) {
    auto* g = cmd->add_option("--graph", a.graph_path, "graph file");
    if (need_graph) g->required();
    cmd->add_option("--format", a.format, "graph file format")
        ->check(CLI::IsMember({"edgelist", "dimacs"}))
        ->capture_default_str();
    cmd->add_option("--problem", a.problem, "problem kind")->required();
    cmd->add_option("--m", a.m, "structure size parameter");
    cmd->add_option("--k", a.k, "color / regularity parameter");
    cmd->add_option("--target-graph", a.target_path, "target graph H (edge list)");
    cmd->add_option("--form", a.form, "cover encoding form")
        ->check(CLI::IsMember({"subset", "original"}))
        ->capture_default_str();
    cmd->add_flag("--full-pairwise", a.full_pairwise,
                  "emit all pairwise degree equations for the regular encoder");
}

long require_m(const ProblemArgs& a) {
    if (a.m < 0) throw parse_error("--m is required for this problem");
    return a.m;
}

PolySystem encode_from_args(const ProblemArgs& a) {
    Graph g = load_graph(a.graph_path, a.format);
    const std::string& p = a.problem;
    if (p == "indset") return encode_independent_set(g, require_m(a));
    if (p == "kcolor") {
        if (a.k < 1) throw parse_error("--k >= 1 is required for kcolor");
        return encode_k_colorable_subgraph(g, a.k, require_m(a));
    }
    if (p == "edgechrom") return encode_edge_chromatic(g, require_m(a));
    if (p == "hom") {
        if (a.target_path.empty()) throw parse_error("--target-graph is required for hom");
        Graph h = Graph::parse_edge_list(read_file(a.target_path));
        return encode_graph_homomorphism(g, h, require_m(a));
    }
    if (p == "regular")
        return encode_regular_spanning_subgraph(g, require_m(a), a.full_pairwise);
    if (p == "kregular") {
        if (a.k < 1) throw parse_error("--k >= 1 is required for kregular");
        return encode_k_regular_subgraph(g, a.k, require_m(a));
    }
    if (p == "vertexcover")
        return encode_vertex_cover(g, require_m(a), a.form == "original"
                                                        ? CoverForm::Original
                                                        : CoverForm::Subset);
    if (p == "edgecover")
        return encode_edge_cover(g, require_m(a), a.form == "original"
                                                      ? CoverForm::Original
                                                      : CoverForm::Subset);
    if (p == "matching-v1") return encode_perfect_matching_v1(g);
    if (p == "matching-v2") return encode_perfect_matching_v2(g);
    throw parse_error("unknown problem '" + p + "'");
}

StructureFamily enumerate_from_args(const ProblemArgs& a, const OracleGuards& guards) {
    Graph g = load_graph(a.graph_path, a.format);
    const std::string& p = a.problem;
    if (p == "indset") return enum_independent_sets(g, guards);
    if (p == "matching") return enum_matchings(g, guards);
    if (p == "kcolor") {
        if (a.k < 1) throw parse_error("--k >= 1 is required for kcolor");
        return enum_k_colorable_subgraphs(g, a.k, guards);
    }
    if (p == "hom") {
        if (a.target_path.empty()) throw parse_error("--target-graph is required for hom");
        Graph h = Graph::parse_edge_list(read_file(a.target_path));
        return enum_homomorphic_subgraphs(g, h, guards);
    }
    if (p == "regular") return enum_regular_subgraphs(g, guards);
    if (p == "kregular") {
        if (a.k < 1) throw parse_error("--k >= 1 is required for kregular");
        return enum_k_regular_subgraphs(g, a.k, guards);
    }
    if (p == "vertexcover") return enum_vertex_covers(g, guards);
    if (p == "edgecover") return enum_edge_covers(g, guards);
    if (p == "cagefree") return enum_cagefree_subgraphs(g, guards);
    throw parse_error("unknown problem '" + p + "'");
}

std::string member_line(const StructureFamily& f, const std::vector<int>& member) {
    if (member.empty()) return "{}";
    std::string line;
    for (std::size_t i = 0; i < member.size(); ++i) {
        if (i) line += " ";
        line += f.labels[static_cast<std::size_t>(member[i])];
    }
    return line;
}

void print_report(const SolveReport& report, std::ostream& os) {
    os << "degree  rows    cols    status      ms\n";
    char buf[128];
    for (const auto& rec : report.records) {
        std::snprintf(buf, sizeof buf, "%-7u %-7zu %-7zu %-11s %.1f\n", rec.degree,
                      rec.n_rows, rec.n_cols,
                      rec.status == SolveStatus::Solved ? "solved" : "infeasible",
                      rec.wall_ms);
        os << buf;
    }
}

void write_benchmark_csv(const SolveReport& report, const std::string& path) {
    std::ostringstream csv;
    csv << "degree,rows,cols,status,ms\n";
    for (const auto& rec : report.records)
        csv << rec.degree << "," << rec.n_rows << "," << rec.n_cols << ","
            << (rec.status == SolveStatus::Solved ? "solved" : "infeasible") << ","
            << rec.wall_ms << "\n";
    write_file(path, csv.str());
}

int run(int argc, char** argv) {
    CLI::App app{"Nullstellensatz infeasibility certificates for graph problems"};
    app.require_subcommand(1);
    app.fallthrough();

    OracleGuards guards;
    NullaOptions nulla_opts;
    app.add_option("--guard-vertices", guards.max_vertices,
                   "oracle vertex-count guard")
        ->envname("NULLCERT_GUARD_VERTICES")
        ->capture_default_str();
    app.add_option("--guard-edges", guards.max_edges, "oracle edge-count guard")
        ->envname("NULLCERT_GUARD_EDGES")
        ->capture_default_str();
    app.add_option("--column-cap", nulla_opts.column_cap,
                   "matrix column cap for the degree-ascent solver")
        ->capture_default_str();

    // encode
    auto* enc = app.add_subcommand("encode", "build a polynomial system from a graph");
    ProblemArgs enc_args;
    add_problem_options(enc, enc_args, true);
    std::string enc_out;
    enc->add_option("-o,--output", enc_out, "system JSON output path");

    // solve
    auto* sol = app.add_subcommand("solve", "search for a minimum-degree certificate");
    ProblemArgs sol_args;
    std::string sol_system, sol_out, sol_benchmark, sol_dump;
    long sol_bound = -1;
    sol->add_option("--system", sol_system, "system JSON file (alternative to encoding inline)");
    add_problem_options(sol, sol_args, false);
    sol->get_option("--problem")->required(false);
    sol->add_option("--degree-bound", sol_bound, "override the ascent bound");
    sol->add_option("-o,--output", sol_out, "certificate JSON output path");
    sol->add_option("--benchmark", sol_benchmark, "per-degree matrix dimensions CSV");
    sol->add_option("--dump-matrix", sol_dump,
                    "write the linear system of each degree in coordinate text "
                    "format to <path>.d<degree>");

    // verify
    auto* ver = app.add_subcommand("verify", "check sum(beta_i f_i) = 1 exactly");
    std::string ver_system, ver_cert;
    ver->add_option("--system", ver_system, "system JSON file")->required();
    ver->add_option("--certificate", ver_cert, "certificate JSON file")->required();

    // enumerate
    auto* enu = app.add_subcommand("enumerate", "brute-force structure families");
    ProblemArgs enu_args;
    add_problem_options(enu, enu_args, true);

    // analyze
    auto* ana = app.add_subcommand("analyze",
                                   "enumerative-certificate report for an instance");
    ProblemArgs ana_args;
    std::string ana_system;
    long ana_bound = -1;
    ana->add_option("--system", ana_system, "system JSON file");
    add_problem_options(ana, ana_args, false);
    ana->get_option("--problem")->required(false);
    ana->add_option("--degree-bound", ana_bound, "override the ascent bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    if (enc->parsed()) {
        PolySystem s = encode_from_args(enc_args);
        std::string text = system_to_json(s);
        if (!enc_out.empty())
            write_file(enc_out, text);
        else
            std::cout << text;
        std::cerr << "variables: " << s.table->size() << "  equations: " << s.size()
                  << "\n";
        return 0;
    }

    if (sol->parsed()) {
        PolySystem s = sol_system.empty() ? encode_from_args(sol_args)
                                          : system_from_json(read_file(sol_system));
        unsigned bound = sol_bound >= 0 ? static_cast<unsigned>(sol_bound)
                                        : default_degree_bound(s, guards);
        if (!sol_dump.empty()) {
            for (unsigned d = 0; d <= bound; ++d) {
                auto [mat, cols] = build_linear_system(s, d, nulla_opts);
                std::ostringstream os;
                mat.dump_coordinate(os);
                write_file(sol_dump + ".d" + std::to_string(d), os.str());
                SolveResult sr = solve_particular(mat);
                if (sr.status == SolveStatus::Solved) break;
            }
        }
        NullaResult res = nulla_solve(s, bound, nulla_opts);
        print_report(res.report, std::cout);
        if (!sol_benchmark.empty()) write_benchmark_csv(res.report, sol_benchmark);
        if (!res.certificate) {
            std::cout << "no certificate up to degree " << bound << "\n";
            return kExitNoCertificate;
        }
        std::cout << "certificate of degree " << res.certificate->degree << "\n";
        std::string text = certificate_to_json(*res.certificate, s, &res.report);
        if (!sol_out.empty())
            write_file(sol_out, text);
        else
            std::cout << text;
        return 0;
    }

    if (ver->parsed()) {
        PolySystem s = system_from_json(read_file(ver_system));
        LoadedCertificate loaded = certificate_from_json(read_file(ver_cert), s);
        if (!loaded.system_hash.empty() && loaded.system_hash != system_hash(s))
            std::cerr << "warning: certificate was produced for a different system "
                         "(hash mismatch); verifying algebraically anyway\n";
        VerifyResult check = verify_certificate(s, loaded.cert);
        if (check.ok) {
            std::cout << "verified: sum(beta_i f_i) = 1\n";
            return 0;
        }
        std::cout << "verification FAILED; residual = " << check.residual.str() << "\n";
        return kExitNoCertificate;
    }

    if (enu->parsed()) {
        StructureFamily f = enumerate_from_args(enu_args, guards);
        for (const auto& member : f.members) std::cout << member_line(f, member) << "\n";
        std::cout << "count: " << f.members.size() << "\n";
        std::cout << "max size: "
                  << (f.members.empty() ? 0 : max_structure_size(f)) << "\n";
        auto closed = is_subset_closed(f);
        std::cout << "subset closed: " << (closed.closed ? "yes" : "no") << "\n";
        if (closed.witness)
            std::cout << "witness: " << member_line(f, closed.witness->member)
                      << " in family, subset " << member_line(f, closed.witness->subset)
                      << " missing\n";
        return 0;
    }

    if (ana->parsed()) {
        PolySystem s = ana_system.empty() ? encode_from_args(ana_args)
                                          : system_from_json(read_file(ana_system));
        std::optional<unsigned> bound;
        if (ana_bound >= 0) bound = static_cast<unsigned>(ana_bound);
        AnalyzeReport rep = run_analysis(s, bound, guards, nulla_opts);
        std::cout << "kind: " << kind_name(rep.kind) << "\n";
        if (rep.refusal) std::cout << "oracle refused: " << *rep.refusal << "\n";
        if (rep.oracle_available) {
            std::cout << "family size: " << rep.family_size
                      << "  max structure: " << rep.max_structure << "\n";
            std::cout << "subset closed: " << (rep.subset_closed ? "yes" : "no") << "\n";
        }
        if (rep.kreg_edge_condition)
            std::cout << "k-regular edge condition: "
                      << (*rep.kreg_edge_condition ? "holds" : "does not hold") << "\n";
        if (rep.feasible) {
            std::cout << "instance is feasible (a structure of the target size "
                         "exists); nothing to certify\n";
            return 0;
        }
        if (rep.bipartite_fast_path)
            std::cout << "bipartite fast path: degree-0 certificate exists\n";
        if (rep.downgraded) {
            std::cout << "enumerative construction not applicable; empirical data "
                         "only\n";
            if (rep.nulla_degree)
                std::cout << "nulla minimal degree: " << *rep.nulla_degree << "\n";
            print_report(rep.nulla_report, std::cout);
            return 0;
        }
        std::cout << "structure | monomial | beta1 coefficient\n";
        for (const auto& row : rep.rows)
            std::cout << row.structure << " | " << row.monomial << " | "
                      << row.coefficient << "\n";
        std::cout << "support size: " << rep.support_size
                  << "  family size: " << rep.family_size << "\n";
        std::cout << "support match: " << (rep.support_match ? "PASS" : "FAIL") << "\n";
        std::cout << "common sign: " << (rep.common_sign ? "PASS" : "FAIL")
                  << " (observed " << (rep.observed_sign < 0 ? "negative" : "positive")
                  << ")\n";
        std::cout << "completion verified: " << (rep.complete_verified ? "PASS" : "FAIL")
                  << "\n";
        if (rep.enum_degree) std::cout << "enumerative degree: " << *rep.enum_degree << "\n";
        if (rep.nulla_degree) std::cout << "nulla minimal degree: " << *rep.nulla_degree << "\n";
        std::cout << "degree match: " << (rep.degree_match ? "PASS" : "FAIL") << "\n";
        print_report(rep.nulla_report, std::cout);
        return 0;
    }

    return kExitInputError;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const nullcert::guard_refusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefused;
    } catch (const nullcert::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const nullcert::structural_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
