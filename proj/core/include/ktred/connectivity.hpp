#ifndef KTRED_CONNECTIVITY_HPP
#define KTRED_CONNECTIVITY_HPP

#include <optional>
#include <vector>

#include "ktred/graph.hpp"

namespace ktred {

// A vertex bipartition witnessing an upper bound on edge connectivity:
// cut_edges is exactly the set of edges with one endpoint in side and
// one outside, and removing them disconnects side from the rest.
struct CutCertificate {
    std::vector<VertexId> side;   // sorted, proper nonempty subset
    std::vector<Edge> cut_edges;  // sorted
};

struct ConnectivityVerdict {
    int lambda = 0;
    bool infinite = false;  // single-vertex graph: no disconnecting set exists
    std::optional<CutCertificate> witness;  // absent iff infinite
};

// Global edge connectivity with a minimum-cut witness, computed as the
// minimum over t != 0 of max-flow(0, t) with unit capacities.
// Disconnected input yields lambda 0 with a component as side.
ConnectivityVerdict edge_connectivity(const Graph& g);

// Maximum number of pairwise edge-disjoint u-v paths (= minimum u-v
// edge cut).
int local_edge_connectivity(const Graph& g, VertexId u, VertexId v);

struct KConnectivity {
    bool ok = false;
    std::optional<CutCertificate> cut;  // on failure: a cut of size < k

    explicit operator bool() const { return ok; }
};

// True iff every disconnecting edge set has at least k edges. Needs
// n >= 2; single-vertex graphs are rejected rather than answered.
KConnectivity is_k_edge_connected(const Graph& g, int k);

// True iff g minus e is still k-edge-connected.
bool is_insensitive(const Graph& g, Edge e, int k);

struct MinimalityVerdict {
    bool k_connected = false;
    std::optional<CutCertificate> cut;  // when not k-connected
    std::vector<Edge> insensitive;      // sorted; empty iff minimal

    bool minimal() const { return k_connected && insensitive.empty(); }
};

// k-edge-connected and no single edge can be spared. The insensitive
// list is empty exactly when the verdict is minimal.
MinimalityVerdict is_minimally_k_edge_connected(const Graph& g, int k);

// Exhaustive oracle: smallest edge subset whose removal disconnects g,
// found by enumerating subsets in increasing size. Hard guard at 16
// edges; throws oracle_limit_error beyond that.
int brute_force_edge_connectivity(const Graph& g);

}  // namespace ktred

#endif
