#include "ktred/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace ktred {

Edge::Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) {
        throw input_error("self-loop (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
}

std::string to_string(Edge e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Graph::Graph(int n) {
    if (n < 0) {
        throw input_error("negative vertex count " + std::to_string(n));
    }
    adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count()) {
        throw input_error("vertex id " + std::to_string(v) + " out of range [0," +
                          std::to_string(vertex_count()) + ")");
    }
}

int Graph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

const std::set<VertexId>& Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

void Graph::add_edge(Edge e) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (has_edge(e)) {
        throw input_error("duplicate edge " + to_string(e));
    }
    adj_[static_cast<std::size_t>(e.u)].insert(e.v);
    adj_[static_cast<std::size_t>(e.v)].insert(e.u);
    ++m_;
}

void Graph::remove_edge(Edge e) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (!has_edge(e)) {
        throw input_error("edge " + to_string(e) + " not present");
    }
    adj_[static_cast<std::size_t>(e.u)].erase(e.v);
    adj_[static_cast<std::size_t>(e.v)].erase(e.u);
    --m_;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (VertexId u = 0; u < vertex_count(); ++u) {
        for (VertexId v : adj_[static_cast<std::size_t>(u)]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;  // already sorted: u ascending, v ascending within each set
}

Graph from_edge_list(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (Edge e : edges) {
        if (e.v >= n) {
            throw input_error("edge " + to_string(e) + " has endpoint >= n=" + std::to_string(n));
        }
        if (g.has_edge(e)) {
            throw input_error("duplicate edge " + to_string(e));
        }
        g.add_edge(e);
    }
    return g;
}

std::vector<Edge> to_edge_list(const Graph& g) {
    return g.edges();
}

int degree(const Graph& g, VertexId v) {
    return g.degree(v);
}

Graph remove_edge(const Graph& g, Edge e) {
    Graph out = g;
    out.remove_edge(e);
    return out;
}

}  // namespace ktred
