#include "ktred/ktree.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ktred {

namespace {

bool is_clique(const Graph& g, const std::vector<VertexId>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!g.has_edge(vs[i], vs[j])) {
                return false;
            }
        }
    }
    return true;
}

std::string join_ids(const std::vector<VertexId>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += std::to_string(vs[i]);
    }
    return out;
}

}  // namespace

Graph build_ktree(const KTreeTrace& trace) {
    if (trace.k < 1) {
        throw construction_error("k must be positive, got " + std::to_string(trace.k));
    }
    const int k = trace.k;
    const int n = trace.vertex_count();
    if (static_cast<int>(trace.base.size()) != k + 1) {
        throw construction_error("base has " + std::to_string(trace.base.size()) +
                                 " vertices, expected " + std::to_string(k + 1));
    }

    std::vector<char> present(static_cast<std::size_t>(n), 0);
    auto mark = [&](VertexId v, const std::string& where) {
        if (v < 0 || v >= n) {
            throw construction_error(where + ": vertex " + std::to_string(v) +
                                     " outside 0.." + std::to_string(n - 1));
        }
        if (present[static_cast<std::size_t>(v)]) {
            throw construction_error(where + ": vertex " + std::to_string(v) + " already present");
        }
        present[static_cast<std::size_t>(v)] = 1;
    };

    Graph g(n);
    for (VertexId v : trace.base) {
        mark(v, "base");
    }
    for (std::size_t i = 0; i < trace.base.size(); ++i) {
        for (std::size_t j = i + 1; j < trace.base.size(); ++j) {
            g.add_edge(Edge(trace.base[i], trace.base[j]));
        }
    }

    for (std::size_t step = 0; step < trace.additions.size(); ++step) {
        const Attachment& a = trace.additions[step];
        const std::string where =
            "addition " + std::to_string(step) + " (vertex " + std::to_string(a.vertex) + ")";
        if (static_cast<int>(a.clique.size()) != k) {
            throw construction_error(where + ": attach set has " +
                                     std::to_string(a.clique.size()) + " vertices, expected " +
                                     std::to_string(k));
        }
        for (VertexId w : a.clique) {
            if (w < 0 || w >= n || !present[static_cast<std::size_t>(w)]) {
                throw construction_error(where + ": attach vertex " + std::to_string(w) +
                                         " not present yet");
            }
        }
        std::vector<VertexId> attach = a.clique;
        std::sort(attach.begin(), attach.end());
        if (std::adjacent_find(attach.begin(), attach.end()) != attach.end()) {
            throw construction_error(where + ": attach set has repeated vertices");
        }
        if (!is_clique(g, attach)) {
            throw construction_error(where + ": attach set {" + join_ids(attach) +
                                     "} is not a clique at this step");
        }
        mark(a.vertex, where);
        for (VertexId w : attach) {
            g.add_edge(Edge(a.vertex, w));
        }
    }

    assert(g.edge_count() ==
           (k + 1) * k / 2 + k * static_cast<int>(trace.additions.size()));
    return g;
}

Recognition recognize_ktree(const Graph& g, int k) {
    if (k < 1) {
        throw input_error("k must be positive, got " + std::to_string(k));
    }
    const int n = g.vertex_count();
    if (n < k + 1) {
        return {std::nullopt, "graph has " + std::to_string(n) + " vertices, a " +
                                  std::to_string(k) + "-tree needs at least " +
                                  std::to_string(k + 1)};
    }

    Graph work = g;
    std::vector<char> alive(static_cast<std::size_t>(n), 1);

    auto neighborhood = [&](VertexId v) {
        return std::vector<VertexId>(work.neighbors(v).begin(), work.neighbors(v).end());
    };
    auto eligible = [&](VertexId v) {
        if (!alive[static_cast<std::size_t>(v)] || work.degree(v) != k) {
            return false;
        }
        return is_clique(work, neighborhood(v));
    };

    std::set<VertexId> candidates;
    for (VertexId v = 0; v < n; ++v) {
        if (eligible(v)) {
            candidates.insert(v);
        }
    }

    std::vector<Attachment> peeled;
    int remaining = n;
    while (remaining > k + 1) {
        if (candidates.empty()) {
            return {std::nullopt, "no simplicial vertex of degree " + std::to_string(k) +
                                      " among " + std::to_string(remaining) +
                                      " remaining vertices"};
        }
        const VertexId v = *candidates.begin();  // smallest id, keeps the trace deterministic
        std::vector<VertexId> attach = neighborhood(v);
        peeled.push_back({v, attach});
        for (VertexId w : attach) {
            work.remove_edge(Edge(v, w));
        }
        alive[static_cast<std::size_t>(v)] = 0;
        candidates.erase(v);
        --remaining;
        // only the removed vertex's neighbors can change status
        for (VertexId w : attach) {
            if (eligible(w)) {
                candidates.insert(w);
            } else {
                candidates.erase(w);
            }
        }
    }

    std::vector<VertexId> base;
    for (VertexId v = 0; v < n; ++v) {
        if (alive[static_cast<std::size_t>(v)]) {
            base.push_back(v);
        }
    }
    if (!is_clique(work, base)) {
        return {std::nullopt, "remaining " + std::to_string(k + 1) +
                                  " vertices {" + join_ids(base) + "} do not form a clique"};
    }

    KTreeTrace trace;
    trace.k = k;
    trace.base = base;
    trace.additions.assign(peeled.rbegin(), peeled.rend());
    return {trace, ""};
}

std::vector<VertexId> simplicial_vertices(const Graph& g) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<VertexId> nb(g.neighbors(v).begin(), g.neighbors(v).end());
        if (is_clique(g, nb)) {
            out.push_back(v);
        }
    }
    return out;
}

namespace {

void extend_cliques(const Graph& g, int size, std::vector<VertexId>& cur,
                    const std::vector<VertexId>& cands,
                    std::vector<std::vector<VertexId>>& out) {
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    const int missing = size - static_cast<int>(cur.size());
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (static_cast<int>(cands.size() - i) < missing) {
            break;
        }
        const VertexId v = cands[i];
        std::vector<VertexId> next;
        for (std::size_t j = i + 1; j < cands.size(); ++j) {
            if (g.has_edge(v, cands[j])) {
                next.push_back(cands[j]);
            }
        }
        cur.push_back(v);
        extend_cliques(g, size, cur, next, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<VertexId>> enumerate_cliques(const Graph& g, int size) {
    if (size < 1) {
        throw input_error("clique size must be positive, got " + std::to_string(size));
    }
    std::vector<VertexId> all(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        all[static_cast<std::size_t>(v)] = v;
    }
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> cur;
    extend_cliques(g, size, cur, all, out);
    return out;
}

std::vector<std::vector<VertexId>> trace_cliques(const KTreeTrace& trace) {
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> base = trace.base;
    std::sort(base.begin(), base.end());
    out.push_back(base);
    for (const Attachment& a : trace.additions) {
        std::vector<VertexId> c = a.clique;
        c.push_back(a.vertex);
        std::sort(c.begin(), c.end());
        out.push_back(c);
    }
    return out;
}

EdgeCliqueIndex edge_clique_index(const Graph& g, int k) {
    if (k < 1) {
        throw input_error("k must be positive, got " + std::to_string(k));
    }
    EdgeCliqueIndex index;
    index.k = k;
    for (Edge e : g.edges()) {
        index.counts[e] = 0;
    }
    for (const auto& clique : enumerate_cliques(g, k + 1)) {
        for (std::size_t i = 0; i < clique.size(); ++i) {
            for (std::size_t j = i + 1; j < clique.size(); ++j) {
                ++index.counts[Edge(clique[i], clique[j])];
            }
        }
    }
    return index;
}

std::string trace_to_text(const KTreeTrace& trace) {
    std::string out = std::to_string(trace.k) + "\n" + join_ids(trace.base) + "\n";
    for (const Attachment& a : trace.additions) {
        out += std::to_string(a.vertex) + ": " + join_ids(a.clique) + "\n";
    }
    return out;
}

KTreeTrace trace_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&](bool required) {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty()) {
                return true;
            }
        }
        if (required) {
            throw io_error("trace: unexpected end of input at line " + std::to_string(lineno + 1));
        }
        return false;
    };

    KTreeTrace trace;
    next_line(true);
    {
        std::istringstream ls(line);
        if (!(ls >> trace.k) || trace.k < 1) {
            throw io_error("trace line 1: expected positive k, got \"" + line + "\"");
        }
    }
    next_line(true);
    {
        std::istringstream ls(line);
        VertexId v = 0;
        while (ls >> v) {
            trace.base.push_back(v);
        }
        if (static_cast<int>(trace.base.size()) != trace.k + 1) {
            throw io_error("trace line 2: expected " + std::to_string(trace.k + 1) +
                           " base vertices, got " + std::to_string(trace.base.size()));
        }
    }
    while (next_line(false)) {
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw io_error("trace line " + std::to_string(lineno) + ": missing ':' in \"" + line +
                           "\"");
        }
        Attachment a;
        try {
            a.vertex = std::stoi(line.substr(0, colon));
        } catch (const std::exception&) {
            throw io_error("trace line " + std::to_string(lineno) + ": bad vertex id in \"" + line +
                           "\"");
        }
        std::istringstream ls(line.substr(colon + 1));
        VertexId w = 0;
        while (ls >> w) {
            a.clique.push_back(w);
        }
        if (static_cast<int>(a.clique.size()) != trace.k) {
            throw io_error("trace line " + std::to_string(lineno) + ": expected " +
                           std::to_string(trace.k) + " attach vertices, got " +
                           std::to_string(a.clique.size()));
        }
        trace.additions.push_back(std::move(a));
    }
    return trace;
}

}  // namespace ktred
