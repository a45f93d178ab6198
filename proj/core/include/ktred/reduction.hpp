#ifndef KTRED_REDUCTION_HPP
#define KTRED_REDUCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "ktred/connectivity.hpp"
#include "ktred/graph.hpp"

namespace ktred {

// fast: remove every candidate outright. verified: re-check k-edge-
// connectivity before each removal and skip, with a cut certificate,
// any edge whose removal would break it.
enum class ReduceMode { fast, verified };

std::string to_string(ReduceMode mode);

struct SkipEntry {
    Edge edge;
    std::string reason;                 // "degree" or "connectivity"
    std::optional<CutCertificate> cut;  // set for connectivity skips
};

struct ReductionReport {
    int k = 0;
    ReduceMode mode = ReduceMode::fast;
    int input_n = 0;
    int input_m = 0;
    int final_m = 0;
    std::vector<Edge> removed;  // the set F, in removal order
    std::vector<SkipEntry> skipped;
    // verified runs that skipped for connectivity: edges on which the
    // two modes' removal sets differ (sorted); empty otherwise
    std::vector<Edge> deviations;
    std::optional<MinimalityVerdict> final_minimal;  // populated on request
    std::string advisory;  // set when the input is below the size threshold
};

struct ReductionResult {
    Graph graph;
    ReductionReport report;
};

// Triangle-based reduction of a 2-tree: removes, as one batch, every
// edge lying in more than one triangle of the input. removed is sorted
// canonically. Inputs with fewer than 4 vertices come back unchanged
// with an advisory. Throws input_error if g is not a 2-tree.
ReductionResult reduce_two_tree(const Graph& g, bool check_minimal = false);

// Degree-based reduction of a k-tree (k >= 2): orders vertices by
// (initial degree, id), lists the edges whose endpoints both start at
// degree >= k+1, then walks that list removing each edge whose
// endpoints still have degree >= k+1. Inputs with fewer than k+2
// vertices come back unchanged with an advisory. Throws input_error if
// g is not a k-tree.
ReductionResult reduce_ktree(const Graph& g, int k, ReduceMode mode,
                             bool check_minimal = false);

// Same walk under a caller-supplied vertex order (a permutation of
// 0..n-1 standing in for the degree sort).
ReductionResult reduce_ktree_ordered(const Graph& g, int k, ReduceMode mode,
                                     const std::vector<VertexId>& order,
                                     bool check_minimal = false);

// 1 <= f_size <= n - 3, the removal-count window every 2-tree
// reduction must land in (n >= 4).
bool check_f_bounds(int n, int f_size);

// Line-oriented text: header "n= m= k= mode=", one line per removed and
// skipped edge in order, trailer "final_edges= minimal=yes|no|unchecked".
std::string report_to_text(const ReductionReport& report);

}  // namespace ktred

#endif
