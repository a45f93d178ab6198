#include "ktred/io.hpp"

#include <fstream>
#include <sstream>

namespace ktred {

std::string graph_to_text(const Graph& g, int k) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) +
                      " " + std::to_string(k) + "\n";
    for (Edge e : g.edges()) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
    return out;
}

GraphFile graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw io_error("graph line 1: empty input");
    }
    int n = 0;
    int m = 0;
    int k = 0;
    {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> n >> m >> k) || (ls >> extra)) {
            throw io_error("graph line 1: expected header \"n m k\", got \"" + line + "\"");
        }
        if (n < 0 || m < 0 || k < 0) {
            throw io_error("graph line 1: negative header field in \"" + line + "\"");
        }
    }

    Graph g(n);
    Edge prev(-2, -1);
    for (int i = 0; i < m; ++i) {
        const int lineno = i + 2;
        if (!std::getline(in, line)) {
            throw io_error("graph line " + std::to_string(lineno) + ": expected " +
                           std::to_string(m) + " edge lines, found " + std::to_string(i));
        }
        std::istringstream ls(line);
        int u = 0;
        int v = 0;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra)) {
            throw io_error("graph line " + std::to_string(lineno) + ": expected \"u v\", got \"" +
                           line + "\"");
        }
        if (u >= v) {
            throw io_error("graph line " + std::to_string(lineno) + ": edge (" +
                           std::to_string(u) + "," + std::to_string(v) + ") not canonical (u < v)");
        }
        if (u < 0 || v >= n) {
            throw io_error("graph line " + std::to_string(lineno) + ": endpoint outside 0.." +
                           std::to_string(n - 1));
        }
        const Edge e(u, v);
        if (i > 0 && !(prev < e)) {
            throw io_error("graph line " + std::to_string(lineno) + ": edges not strictly sorted");
        }
        g.add_edge(e);
        prev = e;
    }
    while (std::getline(in, line)) {
        if (!line.empty()) {
            throw io_error("graph: trailing content after " + std::to_string(m) + " edges: \"" +
                           line + "\"");
        }
    }
    return {std::move(g), k};
}

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

GraphFile read_graph_file(const std::filesystem::path& path) {
    try {
        return graph_from_text(slurp(path));
    } catch (const io_error& e) {
        throw io_error(path.string() + ": " + e.what());
    } catch (const input_error& e) {
        throw io_error(path.string() + ": " + e.what());
    }
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, int k) {
    write_text_file(path, graph_to_text(g, k));
}

KTreeTrace read_trace_file(const std::filesystem::path& path) {
    try {
        return trace_from_text(slurp(path));
    } catch (const io_error& e) {
        throw io_error(path.string() + ": " + e.what());
    }
}

void write_trace_file(const std::filesystem::path& path, const KTreeTrace& trace) {
    write_text_file(path, trace_to_text(trace));
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot open " + path.string() + " for writing");
    }
    out << text;
    if (!out) {
        throw io_error("write failed for " + path.string());
    }
}

std::string to_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out += "  " + std::to_string(v) + ";\n";
    }
    for (Edge e : g.edges()) {
        out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace ktred
