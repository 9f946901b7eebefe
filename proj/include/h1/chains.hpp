#ifndef H1_CHAINS_HPP
#define H1_CHAINS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "h1/graph.hpp"
#include "h1/indicator.hpp"

namespace h1 {

// Glueing gadget: a graph with four boundary vertices x,x',y,y' and a
// marked edge d. A valid gadget satisfies, with respect to 3-colorings:
//  P1  every coloring has c(x) != c(x') or c(y) != c(y'), but not both;
//  P2  every boundary map with exactly one inequality extends;
//  P3  every boundary map with both equalities extends to the graph - d.
struct Gadget {
    Graph graph;
    int x = 0, xp = 0, y = 0, yp = 0;
    std::pair<int, int> d;
};

struct GadgetCheck {
    bool pass = false;
    std::string failed_property;        // "P1", "P2" or "P3" when failing
    std::vector<int> counterexample;    // full coloring (P1) or boundary map
};

// Exhaustive verification: P1 over all proper colorings, P2 over all
// one-inequality boundary maps, P3 over all equal-pairs boundary maps.
GadgetCheck verify_gadget(const Gadget& g);

// Deterministic synthesis: exhaustive at small sizes, then seeded local
// search over edge sets; any returned gadget re-verifies. The budget
// bounds the number of candidate evaluations.
std::optional<Gadget> search_gadget(int max_vertices, long long budget);

struct CriticalResult {
    Graph subgraph;              // non-3-colorable subgraph of the input
    std::pair<int, int> edge;    // critical: subgraph - edge is 3-colorable
};

// Removes edges in lexicographic order until the graph turns 3-colorable;
// the last removed edge is critical for the preceding graph. Returns
// nullopt iff the input is 3-colorable.
std::optional<CriticalResult> find_critical(const Graph& g);

// The three 6-slot diagonal patterns over variables x=0, y=1, z=2.
const std::array<std::array<int, 6>, 3>& sigma_patterns();

// The unique permutation sigma of {1..6} (one-line, 1-based) aligning the
// column pairs of patterns (i,j) with those of (1,2); substituting it into
// a 6-ary symbol realizes the glued-edge identities. Requires i != j.
std::array<int, 6> sigma_permutation(int i, int j);

struct GlueResult {
    Graph w;
    std::pair<int, int> d;
};

// (g,e) + (h,f) glued through the gadget: disjoint union of g-e, h-f and
// the gadget graph with e's endpoints identified with (x,x') and f's with
// (y,y'); both pairs stay non-edges. |V(W)| = |V(g)|+|V(h)|+|V(N)|-4.
GlueResult glue(const Graph& g, std::pair<int, int> e, const Graph& h,
                std::pair<int, int> f, const Gadget& n);

struct TensorChainStep {
    Graph graph;
    std::uint64_t noncol_digest = 0;  // exhausted 3-coloring instance
    std::vector<int> projection;      // homomorphism onto the previous step
};

// Prefix tensor products of the non-3-colorable enumeration; the
// enumeration restarts from its first element when exhausted, so small
// max_n yields plain tensor powers.
std::vector<TensorChainStep> tensor_chain(int k, int max_n,
                                          long long max_vertices = 100000);

struct GlueChainStep {
    Graph graph;
    std::pair<int, int> d;
    std::uint64_t noncol_digest = 0;
    std::vector<int> relaxed_coloring; // 3-coloring of graph - d
};

// Iterated glueing: each enumerated graph is first reduced to a critical
// subgraph, then glued onto the running chain at the previous marked edge.
std::vector<GlueChainStep> glue_chain(int k, const Gadget& gadget, int max_n,
                                      long long max_vertices = 100000);

struct CssResult {
    bool accept = false;
    std::vector<int> witness;          // homomorphism g -> input on reject
    std::vector<std::string> warnings; // precondition advisories
    std::uint64_t search_digest = 0;
};

// Membership in Forb(g): rejects inputs containing a homomorphic image of
// g (with the homomorphism as witness), accepts after exhaustive search.
CssResult css_decide(const Graph& g, const Graph& input);

} // namespace h1

#endif
