#ifndef H1_ENUMERATE_HPP
#define H1_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "h1/graph.hpp"

namespace h1 {

// Canonical form of a loopless graph on up to 12 vertices: the minimal
// upper-triangle adjacency bitmask over all vertex permutations.
std::uint64_t canonical_mask(const Graph& g);

Graph graph_of_mask(int n, std::uint64_t mask);

bool isomorphic_small(const Graph& a, const Graph& b);

// All loopless graphs on exactly n vertices, one per isomorphism class,
// ordered by canonical mask.
std::vector<Graph> all_graphs_up_to_iso(int n, bool connected_only = false);

// All connected loopless non-3-colorable graphs with at most max_n
// vertices, one per isomorphism class, ordered by vertex count and then
// canonical edge-set order.
std::vector<Graph> enumerate_non_3col(int max_n);

} // namespace h1

#endif
