#ifndef KTRED_GENERATORS_HPP
#define KTRED_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "ktred/ktree.hpp"

namespace ktred {

enum class Family { random_attach, book, path };

Family family_from_name(const std::string& name);  // "random" | "book" | "path"
std::string to_string(Family family);

struct GenSpec {
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    Family family = Family::random_attach;
};

// Seeded random k-tree: base {0..k}; each new vertex attaches to a
// k-clique obtained by picking a uniformly random existing (k+1)-clique
// (tracked incrementally) and dropping one uniformly random member.
// Not uniform over k-trees; same spec gives the identical trace on
// every platform (mt19937_64 stream reduced by modulo).
KTreeTrace random_ktree(const GenSpec& spec);

// All triangles share the edge {0,1}: base {0,1,2}, every later vertex
// attaches to {0,1}.
KTreeTrace book_two_tree(int n);

// Each new vertex attaches to the most recently created edge: base
// {0,1,2}, vertex j attaches to {j-2, j-1}.
KTreeTrace path_two_tree(int n);

// Dispatch on spec.family.
KTreeTrace generate(const GenSpec& spec);

}  // namespace ktred

#endif
