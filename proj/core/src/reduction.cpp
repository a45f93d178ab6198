#include "ktred/reduction.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ktred/ktree.hpp"

namespace ktred {

std::string to_string(ReduceMode mode) {
    return mode == ReduceMode::fast ? "fast" : "verified";
}

namespace {

void require_ktree(const Graph& g, int k, const char* what) {
    const Recognition rec = recognize_ktree(g, k);
    if (!rec.ok()) {
        throw input_error(std::string(what) + ": not a " + std::to_string(k) +
                          "-tree (" + rec.failure + ")");
    }
}

ReductionReport fresh_report(const Graph& g, int k, ReduceMode mode) {
    ReductionReport report;
    report.k = k;
    report.mode = mode;
    report.input_n = g.vertex_count();
    report.input_m = g.edge_count();
    return report;
}

ReductionResult unchanged_below_threshold(const Graph& g, int k, ReduceMode mode) {
    ReductionReport report = fresh_report(g, k, mode);
    report.final_m = g.edge_count();
    report.advisory = "input has " + std::to_string(g.vertex_count()) +
                      " vertices, below the reduction threshold of " + std::to_string(k + 2) +
                      "; returned unchanged";
    return {g, std::move(report)};
}

// Candidate edges in list order; removes each whose endpoints still
// have degree >= k+1. Shared by both modes; verified mode passes a
// connectivity gate.
void run_removal_walk(Graph& work, const std::vector<Edge>& list, int k, ReduceMode mode,
                      ReductionReport& report) {
    std::vector<int> deg(static_cast<std::size_t>(work.vertex_count()));
    for (VertexId v = 0; v < work.vertex_count(); ++v) {
        deg[static_cast<std::size_t>(v)] = work.degree(v);
    }
    for (Edge e : list) {
        if (deg[static_cast<std::size_t>(e.u)] < k + 1 ||
            deg[static_cast<std::size_t>(e.v)] < k + 1) {
            report.skipped.push_back({e, "degree", std::nullopt});
            continue;
        }
        if (mode == ReduceMode::verified) {
            work.remove_edge(e);
            const KConnectivity check = is_k_edge_connected(work, k);
            if (!check.ok) {
                work.add_edge(e);
                report.skipped.push_back({e, "connectivity", check.cut});
                continue;
            }
        } else {
            work.remove_edge(e);
        }
        --deg[static_cast<std::size_t>(e.u)];
        --deg[static_cast<std::size_t>(e.v)];
        report.removed.push_back(e);
    }
}

}  // namespace

ReductionResult reduce_two_tree(const Graph& g, bool check_minimal) {
    require_ktree(g, 2, "reduce_two_tree");
    if (g.vertex_count() < 4) {
        return unchanged_below_threshold(g, 2, ReduceMode::fast);
    }

    ReductionReport report = fresh_report(g, 2, ReduceMode::fast);

    // triangle census on the original graph; removal happens as a batch
    const EdgeCliqueIndex index = edge_clique_index(g, 2);
    Graph out = g;
    for (const auto& [edge, count] : index.counts) {
        if (count > 1) {
            out.remove_edge(edge);
            report.removed.push_back(edge);  // map order = canonical order
        }
    }
    report.final_m = out.edge_count();
    assert(check_f_bounds(report.input_n, static_cast<int>(report.removed.size())));
    if (check_minimal) {
        report.final_minimal = is_minimally_k_edge_connected(out, 2);
    }
    return {std::move(out), std::move(report)};
}

ReductionResult reduce_ktree_ordered(const Graph& g, int k, ReduceMode mode,
                                     const std::vector<VertexId>& order, bool check_minimal) {
    if (k < 2) {
        throw input_error("reduce_ktree needs k >= 2, got " + std::to_string(k));
    }
    require_ktree(g, k, "reduce_ktree");

    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) {
        throw input_error("order has " + std::to_string(order.size()) + " entries, expected " +
                          std::to_string(n));
    }
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (VertexId v : order) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
                throw input_error("order is not a permutation of 0.." + std::to_string(n - 1));
            }
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    if (n < k + 2) {
        return unchanged_below_threshold(g, k, mode);
    }

    ReductionReport report = fresh_report(g, k, mode);

    // edges whose endpoints both start at degree >= k+1, walked in
    // nested order over the given vertex sequence
    std::vector<Edge> list;
    for (std::size_t s = 0; s < order.size(); ++s) {
        if (g.degree(order[s]) < k + 1) {
            continue;
        }
        for (std::size_t t = s + 1; t < order.size(); ++t) {
            if (g.degree(order[t]) >= k + 1 && g.has_edge(order[s], order[t])) {
                list.emplace_back(order[s], order[t]);
            }
        }
    }

    Graph out = g;
    run_removal_walk(out, list, k, mode, report);
    report.final_m = out.edge_count();

    if (mode == ReduceMode::verified) {
        if (!is_k_edge_connected(out, k).ok) {
            throw std::logic_error("verified reduction produced a non-k-edge-connected graph");
        }
        const bool had_connectivity_skip =
            std::any_of(report.skipped.begin(), report.skipped.end(),
                        [](const SkipEntry& s) { return s.reason == "connectivity"; });
        if (had_connectivity_skip) {
            Graph shadow = g;
            ReductionReport fast_report = fresh_report(g, k, ReduceMode::fast);
            run_removal_walk(shadow, list, k, ReduceMode::fast, fast_report);
            std::set<Edge> ours(report.removed.begin(), report.removed.end());
            std::set<Edge> theirs(fast_report.removed.begin(), fast_report.removed.end());
            std::set_symmetric_difference(ours.begin(), ours.end(), theirs.begin(), theirs.end(),
                                          std::back_inserter(report.deviations));
        }
    }

    if (check_minimal) {
        report.final_minimal = is_minimally_k_edge_connected(out, k);
    }
    return {std::move(out), std::move(report)};
}

ReductionResult reduce_ktree(const Graph& g, int k, ReduceMode mode, bool check_minimal) {
    std::vector<VertexId> order(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) < g.degree(b); });
    return reduce_ktree_ordered(g, k, mode, order, check_minimal);
}

bool check_f_bounds(int n, int f_size) {
    return 1 <= f_size && f_size <= n - 3;
}

std::string report_to_text(const ReductionReport& report) {
    std::string out = "n=" + std::to_string(report.input_n) + " m=" +
                      std::to_string(report.input_m) + " k=" + std::to_string(report.k) +
                      " mode=" + to_string(report.mode) + "\n";
    for (Edge e : report.removed) {
        out += "removed " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
    for (const SkipEntry& s : report.skipped) {
        out += "skipped " + std::to_string(s.edge.u) + " " + std::to_string(s.edge.v) + " " +
               s.reason + "\n";
    }
    std::string minimal = "unchecked";
    if (report.final_minimal) {
        minimal = report.final_minimal->minimal() ? "yes" : "no";
    }
    out += "final_edges=" + std::to_string(report.final_m) + " minimal=" + minimal + "\n";
    return out;
}

}  // namespace ktred
