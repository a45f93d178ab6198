// Command line front end: generate, reduce, verify, and inspect k-trees.
//
// Exit codes:
//   0  success
//   2  bad usage, unreadable or malformed input
//   3  reduce --check-minimal found a non-minimal result
//   4  input failed k-tree recognition
//   5  verify: graph is not k-edge-connected
//   6  verify: graph has insensitive edges
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ktred/connectivity.hpp"
#include "ktred/errors.hpp"
#include "ktred/generators.hpp"
#include "ktred/graph.hpp"
#include "ktred/io.hpp"
#include "ktred/ktree.hpp"
#include "ktred/reduction.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotMinimal = 3;
constexpr int kExitNotKTree = 4;
constexpr int kExitNotConnected = 5;
constexpr int kExitInsensitive = 6;

// the header's k is advisory; an explicit --k wins, otherwise fall back to it
int resolve_k(int flag_k, const ktred::GraphFile& file, const std::string& cmd) {
    if (flag_k > 0) {
        return flag_k;
    }
    if (file.k > 0) {
        return file.k;
    }
    throw ktred::input_error(cmd + ": pass --k, the input file does not carry one");
}

std::string edge_list_text(const std::vector<ktred::Edge>& edges) {
    std::string out;
    for (ktred::Edge e : edges) {
        out += " " + ktred::to_string(e);
    }
    return out;
}

struct GenOptions {
    std::string family = "random";
    int n = 0;
    int k = 2;
    std::uint64_t seed = 0;
    std::string out;
};

int run_gen(const GenOptions& opt) {
    ktred::GenSpec spec{opt.n, opt.k, opt.seed, ktred::family_from_name(opt.family)};
    ktred::KTreeTrace trace = ktred::generate(spec);
    ktred::Graph g = ktred::build_ktree(trace);
    ktred::write_graph_file(opt.out, g, opt.k);
    ktred::write_trace_file(opt.out + ".trace", trace);
    return kExitOk;
}

struct ReduceOptions {
    std::string in;
    int k = 0;
    std::string algorithm;  // tri | degree; default depends on k
    std::string mode = "fast";
    bool check_minimal = false;
    std::string out;
    std::string report;
};

int run_reduce(const ReduceOptions& opt) {
    ktred::GraphFile file = ktred::read_graph_file(opt.in);
    const int k = resolve_k(opt.k, file, "reduce");

    ktred::Recognition rec = ktred::recognize_ktree(file.graph, k);
    if (!rec.ok()) {
        std::cerr << "not a " << k << "-tree: " << rec.failure << "\n";
        return kExitNotKTree;
    }

    std::string algorithm = opt.algorithm;
    if (algorithm.empty()) {
        algorithm = (k == 2) ? "tri" : "degree";
    }
    if (algorithm != "tri" && algorithm != "degree") {
        throw ktred::input_error("reduce: unknown algorithm '" + algorithm + "'");
    }
    if (algorithm == "tri" && k != 2) {
        throw ktred::input_error("reduce: the tri algorithm only applies to k=2");
    }
    if (opt.mode != "fast" && opt.mode != "verified") {
        throw ktred::input_error("reduce: unknown mode '" + opt.mode + "'");
    }
    const ktred::ReduceMode mode =
        opt.mode == "fast" ? ktred::ReduceMode::fast : ktred::ReduceMode::verified;

    ktred::ReductionResult result =
        algorithm == "tri" ? ktred::reduce_two_tree(file.graph, opt.check_minimal)
                           : ktred::reduce_ktree(file.graph, k, mode, opt.check_minimal);

    const std::string text = ktred::report_to_text(result.report);
    std::cout << text;
    if (!opt.out.empty()) {
        ktred::write_graph_file(opt.out, result.graph, k);
    }
    if (!opt.report.empty()) {
        ktred::write_text_file(opt.report, text);
    }
    if (opt.check_minimal && result.report.final_minimal &&
        !result.report.final_minimal->minimal()) {
        return kExitNotMinimal;
    }
    return kExitOk;
}

struct VerifyOptions {
    std::string in;
    int k = 0;
};

int run_verify(const VerifyOptions& opt) {
    ktred::GraphFile file = ktred::read_graph_file(opt.in);
    const int k = resolve_k(opt.k, file, "verify");
    ktred::MinimalityVerdict v = ktred::is_minimally_k_edge_connected(file.graph, k);
    if (!v.k_connected) {
        std::cout << "not-k-edge-connected (cut:"
                  << edge_list_text(v.cut ? v.cut->cut_edges : std::vector<ktred::Edge>{})
                  << ")\n";
        return kExitNotConnected;
    }
    if (!v.insensitive.empty()) {
        std::cout << "insensitive-edges:" << edge_list_text(v.insensitive) << "\n";
        return kExitInsensitive;
    }
    std::cout << "minimal\n";
    return kExitOk;
}

int run_cut(const std::string& in) {
    ktred::GraphFile file = ktred::read_graph_file(in);
    ktred::ConnectivityVerdict v = ktred::edge_connectivity(file.graph);
    if (v.infinite) {
        std::cout << "lambda=inf\n";
        return kExitOk;
    }
    std::cout << "lambda=" << v.lambda << "\n";
    if (v.witness) {
        for (ktred::Edge e : v.witness->cut_edges) {
            std::cout << e.u << " " << e.v << "\n";
        }
    }
    return kExitOk;
}

int run_cliques(const std::string& in, int size) {
    ktred::GraphFile file = ktred::read_graph_file(in);
    auto cliques = ktred::enumerate_cliques(file.graph, size);
    std::cout << "count=" << cliques.size() << "\n";
    for (const auto& clique : cliques) {
        for (std::size_t i = 0; i < clique.size(); ++i) {
            std::cout << (i ? " " : "") << clique[i];
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int run_dot(const std::string& in, const std::string& out) {
    ktred::GraphFile file = ktred::read_graph_file(in);
    const std::string dot = ktred::to_dot(file.graph);
    if (out.empty()) {
        std::cout << dot;
    } else {
        ktred::write_text_file(out, dot);
    }
    return kExitOk;
}

struct BenchOptions {
    int k = 2;
    std::vector<int> n_list;
    std::uint64_t seed = 0;
    int repeats = 3;
};

int run_bench(const BenchOptions& opt) {
    if (opt.repeats < 1) {
        throw ktred::input_error("bench: --repeats must be at least 1");
    }
    for (int n : opt.n_list) {
        double total_ms = 0.0;
        for (int rep = 0; rep < opt.repeats; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            ktred::KTreeTrace trace = ktred::random_ktree(
                {n, opt.k, opt.seed + static_cast<std::uint64_t>(rep), ktred::Family::random_attach});
            ktred::Graph g = ktred::build_ktree(trace);
            ktred::ReductionResult r = ktred::reduce_ktree(g, opt.k, ktred::ReduceMode::fast);
            const auto stop = std::chrono::steady_clock::now();
            total_ms += std::chrono::duration<double, std::milli>(stop - start).count();
            if (r.graph.edge_count() > g.edge_count()) {
                throw std::logic_error("bench: reduction grew the graph");
            }
        }
        char line[64];
        std::snprintf(line, sizeof line, "n=%d mean_ms=%.3f", n, total_ms / opt.repeats);
        std::cout << line << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-tree toolkit: build, recognize, and reduce k-trees to minimally\n"
                 "k-edge-connected graphs. Graph files use 0-based vertex ids: a header\n"
                 "line 'n m k' followed by m sorted edge lines 'u v' with u < v."};
    app.require_subcommand(1);

    int rc = kExitOk;

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a k-tree and its construction trace");
    gen_cmd->add_option("--family", gen.family, "random, book, or path")->capture_default_str();
    gen_cmd->add_option("--n", gen.n, "number of vertices")->required();
    gen_cmd->add_option("--k", gen.k, "clique parameter")->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "random seed")->capture_default_str();
    gen_cmd->add_option("--out", gen.out, "graph file to write; the trace goes to <out>.trace")
        ->required();
    gen_cmd->callback([&] { rc = run_gen(gen); });

    ReduceOptions reduce;
    CLI::App* reduce_cmd =
        app.add_subcommand("reduce", "strip removable edges down to a minimally "
                                     "k-edge-connected subgraph");
    reduce_cmd->add_option("--in", reduce.in, "input graph file")->required();
    reduce_cmd->add_option("--k", reduce.k, "clique parameter; defaults to the file header");
    reduce_cmd->add_option("--algorithm", reduce.algorithm,
                           "tri (triangle census, k=2 only) or degree "
                           "(ordered walk); default tri when k=2, else degree");
    reduce_cmd->add_option("--mode", reduce.mode,
                           "fast, or verified to re-check connectivity per removal")
        ->capture_default_str();
    reduce_cmd->add_flag("--check-minimal", reduce.check_minimal,
                         "run the minimality oracle on the result");
    reduce_cmd->add_option("--out", reduce.out, "write the reduced graph here");
    reduce_cmd->add_option("--report", reduce.report, "write the removal report here");
    reduce_cmd->callback([&] { rc = run_reduce(reduce); });

    VerifyOptions verify;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check a graph for minimal k-edge-connectivity");
    verify_cmd->add_option("--in", verify.in, "input graph file")->required();
    verify_cmd->add_option("--k", verify.k, "connectivity target; defaults to the file header");
    verify_cmd->callback([&] { rc = run_verify(verify); });

    std::string cut_in;
    CLI::App* cut_cmd = app.add_subcommand("cut", "print edge connectivity and a minimum cut");
    cut_cmd->add_option("--in", cut_in, "input graph file")->required();
    cut_cmd->callback([&] { rc = run_cut(cut_in); });

    std::string cliques_in;
    int cliques_size = 0;
    CLI::App* cliques_cmd = app.add_subcommand("cliques", "list cliques of a given size");
    cliques_cmd->add_option("--in", cliques_in, "input graph file")->required();
    cliques_cmd->add_option("--size", cliques_size, "clique size to enumerate")->required();
    cliques_cmd->callback([&] { rc = run_cliques(cliques_in, cliques_size); });

    std::string dot_in;
    std::string dot_out;
    CLI::App* dot_cmd = app.add_subcommand("dot", "render a graph file as DOT");
    dot_cmd->add_option("--in", dot_in, "input graph file")->required();
    dot_cmd->add_option("--out", dot_out, "output file; stdout when omitted");
    dot_cmd->callback([&] { rc = run_dot(dot_in, dot_out); });

    BenchOptions bench;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "time generate+reduce across a range of sizes");
    bench_cmd->add_option("--k", bench.k, "clique parameter")->capture_default_str();
    bench_cmd->add_option("--n-list", bench.n_list, "comma separated sizes")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--seed", bench.seed, "base random seed")->capture_default_str();
    bench_cmd->add_option("--repeats", bench.repeats, "runs per size")->capture_default_str();
    bench_cmd->callback([&] { rc = run_bench(bench); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const ktred::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ktred::oracle_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ktred::construction_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return rc;
}
