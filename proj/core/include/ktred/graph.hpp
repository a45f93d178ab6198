#ifndef KTRED_GRAPH_HPP
#define KTRED_GRAPH_HPP

#include <compare>
#include <set>
#include <vector>

#include "ktred/errors.hpp"

namespace ktred {

using VertexId = int;

// Undirected edge, canonicalized so u < v. Self-loops are rejected.
struct Edge {
    VertexId u;
    VertexId v;

    Edge(VertexId a, VertexId b);

    auto operator<=>(const Edge&) const = default;
};

std::string to_string(Edge e);

// Simple undirected graph on dense vertex ids 0..n-1. Value type: copy
// freely, mutate your own copy. Adjacency is kept symmetric and
// loop-free at all times. const access is safe to share across threads.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }

    int degree(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
    const std::set<VertexId>& neighbors(VertexId v) const;

    void add_edge(Edge e);     // throws input_error if present or out of range
    void remove_edge(Edge e);  // throws input_error if absent

    // Canonical sorted edge list (lexicographic by (u, v)).
    std::vector<Edge> edges() const;

    // Equal vertex count and equal edge sets.
    bool operator==(const Graph& other) const = default;

  private:
    void check_vertex(VertexId v) const;

    std::vector<std::set<VertexId>> adj_;
    int m_ = 0;
};

// Builds a graph from a canonical edge list. Duplicates, self-loops and
// out-of-range endpoints are input errors naming the offending edge.
Graph from_edge_list(int n, const std::vector<Edge>& edges);
std::vector<Edge> to_edge_list(const Graph& g);

int degree(const Graph& g, VertexId v);

// Copy of g with e removed; g itself is untouched.
Graph remove_edge(const Graph& g, Edge e);

}  // namespace ktred

#endif
