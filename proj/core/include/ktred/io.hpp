#ifndef KTRED_IO_HPP
#define KTRED_IO_HPP

#include <filesystem>
#include <string>

#include "ktred/graph.hpp"
#include "ktred/ktree.hpp"

namespace ktred {

// Graph text format: header "n m k" (k 0 when not asserted), then m
// lines "u v" with u < v, strictly sorted lexicographically, 0-based
// ids, LF line endings.
struct GraphFile {
    Graph graph;
    int k = 0;
};

std::string graph_to_text(const Graph& g, int k = 0);
GraphFile graph_from_text(const std::string& text);  // throws io_error naming the line

GraphFile read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g, int k = 0);

KTreeTrace read_trace_file(const std::filesystem::path& path);
void write_trace_file(const std::filesystem::path& path, const KTreeTrace& trace);

void write_text_file(const std::filesystem::path& path, const std::string& text);

// Undirected DOT text listing every vertex and edge.
std::string to_dot(const Graph& g);

}  // namespace ktred

#endif
