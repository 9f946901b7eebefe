#ifndef H1_REL_STRUCTURE_HPP
#define H1_REL_STRUCTURE_HPP

#include <string>
#include <vector>

#include "h1/graph.hpp"

namespace h1 {

struct Relation {
    std::string name;
    int arity = 0;
    std::vector<std::vector<int>> tuples; // sorted, deduplicated
};

// Finite relational structure: a domain 0..domain_size-1 with named
// relations. Used both as CSP template and as encoding target.
struct RelStructure {
    int domain_size = 0;
    std::vector<Relation> relations;

    void add_relation(const std::string& name, int arity,
                      std::vector<std::vector<int>> tuples);
    void validate() const; // throws on arity or range violations
};

// A graph as a template: one binary relation E holding both orientations
// of every edge (loops contribute a single diagonal tuple).
RelStructure graph_to_template(const Graph& g);

RelStructure one_element_template();
// ({0,1}; ternary not-all-equal)
RelStructure nae_template();
// ({0,1}; <=, {0}, {1})
RelStructure ordered_template();

// Replaces each vertex x of a loopless graph by an n-tuple of fresh
// elements laid out at x*n..x*n+n-1; each edge {x,y} contributes the two
// 2n-ary tuples (x-block,y-block) and (y-block,x-block).
RelStructure blowup_encode(const Graph& g, int n);

} // namespace h1

#endif
