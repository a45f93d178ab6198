#include "ktred/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace ktred {

Family family_from_name(const std::string& name) {
    if (name == "random") {
        return Family::random_attach;
    }
    if (name == "book") {
        return Family::book;
    }
    if (name == "path") {
        return Family::path;
    }
    throw input_error("unknown family \"" + name + "\" (expected random, book or path)");
}

std::string to_string(Family family) {
    switch (family) {
        case Family::random_attach: return "random";
        case Family::book: return "book";
        case Family::path: return "path";
    }
    return "?";
}

KTreeTrace random_ktree(const GenSpec& spec) {
    if (spec.k < 1) {
        throw input_error("random family needs k >= 1, got " + std::to_string(spec.k));
    }
    if (spec.n < spec.k + 1) {
        throw input_error("random family needs n >= k+1, got n=" + std::to_string(spec.n) +
                          " k=" + std::to_string(spec.k));
    }

    std::mt19937_64 rng(spec.seed);
    // modulo keeps the draw identical across standard libraries; the
    // slight bias is irrelevant here
    const auto pick = [&rng](std::size_t bound) {
        return static_cast<std::size_t>(rng() % bound);
    };

    KTreeTrace trace;
    trace.k = spec.k;
    trace.base.resize(static_cast<std::size_t>(spec.k) + 1);
    std::iota(trace.base.begin(), trace.base.end(), 0);

    std::vector<std::vector<VertexId>> cliques;  // every (k+1)-clique so far, sorted
    cliques.push_back(trace.base);
    for (VertexId j = spec.k + 1; j < spec.n; ++j) {
        const auto& host = cliques[pick(cliques.size())];
        const std::size_t drop = pick(host.size());
        Attachment a;
        a.vertex = j;
        for (std::size_t i = 0; i < host.size(); ++i) {
            if (i != drop) {
                a.clique.push_back(host[i]);
            }
        }
        std::vector<VertexId> created = a.clique;
        created.push_back(j);  // j is the largest id so far, keeps it sorted
        cliques.push_back(std::move(created));
        trace.additions.push_back(std::move(a));
    }
    return trace;
}

namespace {

KTreeTrace two_tree_family(int n, const char* name,
                           std::vector<VertexId> (*attach)(VertexId)) {
    if (n < 3) {
        throw input_error(std::string(name) + " family needs n >= 3, got " + std::to_string(n));
    }
    KTreeTrace trace;
    trace.k = 2;
    trace.base = {0, 1, 2};
    for (VertexId j = 3; j < n; ++j) {
        trace.additions.push_back({j, attach(j)});
    }
    return trace;
}

}  // namespace

KTreeTrace book_two_tree(int n) {
    return two_tree_family(n, "book", [](VertexId) { return std::vector<VertexId>{0, 1}; });
}

KTreeTrace path_two_tree(int n) {
    return two_tree_family(n, "path",
                           [](VertexId j) { return std::vector<VertexId>{j - 2, j - 1}; });
}

KTreeTrace generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::random_attach: return random_ktree(spec);
        case Family::book:
            if (spec.k != 2) {
                throw input_error("book family needs k=2, got " + std::to_string(spec.k));
            }
            return book_two_tree(spec.n);
        case Family::path:
            if (spec.k != 2) {
                throw input_error("path family needs k=2, got " + std::to_string(spec.k));
            }
            return path_two_tree(spec.n);
    }
    throw input_error("unknown family");
}

}  // namespace ktred
