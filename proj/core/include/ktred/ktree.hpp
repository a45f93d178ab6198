#ifndef KTRED_KTREE_HPP
#define KTRED_KTREE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ktred/graph.hpp"

namespace ktred {

// One step of a k-tree construction: a fresh vertex joined to every
// vertex of an existing k-clique.
struct Attachment {
    VertexId vertex;
    std::vector<VertexId> clique;  // sorted, size k
};

// Construction recipe witnessing k-tree-ness: a complete base on k+1
// vertices plus ordered attachments. Total vertex count is
// base.size() + additions.size() and the ids must cover 0..n-1.
struct KTreeTrace {
    int k = 0;
    std::vector<VertexId> base;  // sorted, size k+1
    std::vector<Attachment> additions;

    int vertex_count() const {
        return static_cast<int>(base.size() + additions.size());
    }
};

// Replays the recipe. Throws construction_error identifying the failing
// step if an attach set is not a clique at its turn, an id is stale or
// duplicated, or the ids are not dense.
Graph build_ktree(const KTreeTrace& trace);

struct Recognition {
    std::optional<KTreeTrace> trace;
    std::string failure;  // empty iff trace is set; names the stage reached

    bool ok() const { return trace.has_value(); }
};

// Peels simplicial vertices of degree exactly k (smallest id first)
// until k+1 vertices remain, then checks the remainder is complete.
// Succeeds iff g is a k-tree; the trace reuses g's own vertex ids, so
// build_ktree(result.trace) reproduces g exactly.
Recognition recognize_ktree(const Graph& g, int k);

// Vertices whose neighborhood induces a complete subgraph.
std::vector<VertexId> simplicial_vertices(const Graph& g);

// All vertex subsets of the given size that induce complete subgraphs,
// each sorted, listed in lexicographic order.
std::vector<std::vector<VertexId>> enumerate_cliques(const Graph& g, int size);

// The (k+1)-cliques a trace's construction contributes: the base plus
// one per addition, in construction order. For a valid trace these are
// exactly the (k+1)-cliques of the built graph, n-k of them.
std::vector<std::vector<VertexId>> trace_cliques(const KTreeTrace& trace);

struct EdgeCliqueIndex {
    int k = 0;
    std::map<Edge, int> counts;  // one entry per edge of the source graph
};

// counts[e] = number of (k+1)-cliques of g containing e.
EdgeCliqueIndex edge_clique_index(const Graph& g, int k);

// Text form: line 1 "k", line 2 the base ids, then one line per
// addition "vertex: a1 a2 ... ak".
std::string trace_to_text(const KTreeTrace& trace);
KTreeTrace trace_from_text(const std::string& text);

}  // namespace ktred

#endif
