#ifndef H1_CONDITIONS_HPP
#define H1_CONDITIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "h1/graph.hpp"

namespace h1 {

struct Symbol {
    std::string name;
    int arity = 0;
    bool operator==(const Symbol&) const = default;
};

// One side of a height-1 identity: a symbol applied to variables selected
// by an argument-index map (repeats allowed, not necessarily surjective).
struct Term {
    int symbol = 0;            // index into HeightOneCondition::symbols
    std::vector<int> args;     // position -> variable index in 0..var_count-1
    bool operator==(const Term&) const = default;
};

struct Identity {
    int var_count = 0;
    Term lhs, rhs;
    bool operator==(const Identity&) const = default;
};

struct HeightOneCondition {
    std::vector<Symbol> symbols;
    std::vector<Identity> identities;

    int symbol_index(const std::string& name) const;
    void validate() const;

    // Normal form: symbols ordered by (length, lexicographic) name,
    // identities sorted and deduplicated. Equality of conditions is
    // equality of normal forms.
    void normalize();

    bool operator==(const HeightOneCondition&) const = default;
};

// Assigns to each symbol a projection coordinate; witnesses satisfaction
// of the condition in the projection clone.
using ProjectionWitness = std::vector<int>;

// The condition Sigma_G: a ternary symbol per vertex, a 6-ary symbol per
// edge (oriented as (u,v) with u <= v), and per edge the identities
//   f_u(x,y,z) = g_e(x,y,x,z,y,z)   f_v(x,y,z) = g_e(y,x,z,x,z,y).
HeightOneCondition sigma_of_graph(const Graph& g);

// Quasi-near-unanimity condition of arity n >= 2: a single n-ary symbol f
// with the chain f(y,x,..,x) = f(x,y,x,..,x) = ... = f(x,..,x,y) = f(x,..,x).
HeightOneCondition sigma_qnu(int n);

// The single-symbol Siggers condition s(x,y,x,z,y,z) = s(y,x,z,x,z,y).
HeightOneCondition siggers_condition();

// Label cover search: a witness certifies satisfaction by projections,
// nullopt certifies non-triviality. Symbols are explored in declaration
// order with forward checking over the identity graph.
std::optional<ProjectionWitness> is_trivial(const HeightOneCondition& c);

// Independent replay of a projection witness.
bool check_projection_witness(const HeightOneCondition& c, const ProjectionWitness& w);

// Gilibert combination: symbols are pairs with summed arities; each
// identity of one factor is padded with a shared block of fresh variables
// on the other factor's coordinates. Non-trivial iff both factors are.
HeightOneCondition combine(const HeightOneCondition& a, const HeightOneCondition& b);

// A homomorphism g -> h certifies that Sigma_h implies Sigma_g.
std::optional<std::vector<int>> implies_via_hom(const Graph& g, const Graph& h);

std::string condition_to_json(const HeightOneCondition& c);
HeightOneCondition condition_from_json(const std::string& text);

} // namespace h1

#endif
