#ifndef H1_HOM_HPP
#define H1_HOM_HPP

#include <optional>
#include <vector>

#include "h1/csp.hpp"
#include "h1/graph.hpp"

namespace h1 {

// CSP encoding of graph homomorphism search: one variable per vertex of g,
// domain V(h), one binary constraint per edge (loops become unary).
CspInstance hom_instance(const Graph& g, const Graph& h);

// Complete search; nullopt means exhaustive refutation.
std::optional<std::vector<int>> find_hom(const Graph& g, const Graph& h);

std::optional<std::vector<int>> three_color(const Graph& g);

// Independent checker: every edge of g lands on an edge of h.
bool is_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& map);

bool is_proper_3coloring(const Graph& g, const std::vector<int>& coloring);

// All proper 3-colorings of g, in lexicographic order of the color vector.
std::vector<std::vector<int>> all_3colorings(const Graph& g);

} // namespace h1

#endif
