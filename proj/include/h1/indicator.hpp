#ifndef H1_INDICATOR_HPP
#define H1_INDICATOR_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "h1/conditions.hpp"
#include "h1/csp.hpp"
#include "h1/graph.hpp"
#include "h1/rel_structure.hpp"

namespace h1 {

// Guards tripped when an indicator instance or clone enumeration would
// exceed its configured cap. The message names the estimated size.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Total finitary operation on the domain, stored in mixed-radix input
// order with the first argument most significant.
struct FunctionTable {
    int arity = 0;
    int domain_size = 0;
    std::vector<int> table;

    int eval(const std::vector<int>& input) const {
        return table[tuple_index(input, domain_size)];
    }
    bool operator==(const FunctionTable&) const = default;
};

bool is_polymorphism(const RelStructure& b, const FunctionTable& f);

struct IndicatorLimits {
    long long max_vars = 500000;        // indicator variables
    long long max_work = 80000000;      // generated relation constraints
    int fgraph_domain_cap = 2;          // clone enumeration cap
    long long max_tuple_space = 1LL << 26; // |V(h)|^n guard for quotients
};

struct SatisfiesResult {
    bool sat = false;
    std::vector<FunctionTable> tables; // one per symbol when sat
    std::uint64_t instance_digest = 0;
};

// Canonical indicator instance: one variable per (symbol, input tuple).
CspInstance indicator_instance(const RelStructure& b, const HeightOneCondition& c,
                               const IndicatorLimits& limits = {});

// Decides whether Pol(b) satisfies c by solving the indicator instance.
SatisfiesResult satisfies(const RelStructure& b, const HeightOneCondition& c,
                          const IndicatorLimits& limits = {});

// Independent replay: every table is a polymorphism of b and every
// identity of c holds pointwise under all variable assignments.
bool check_tables(const RelStructure& b, const HeightOneCondition& c,
                  const std::vector<FunctionTable>& tables);

struct FGraphEdge {
    int a = 0, b = 0;          // vertex indices, a <= b
    FunctionTable witness;     // 6-ary member realizing both diagonals
};

// Graph on the ternary members of Pol(b); an edge (f1,f2) is witnessed by
// a 6-ary g with g(x,y,x,z,y,z) = f1(x,y,z) and g(y,x,z,x,z,y) = f2(x,y,z).
struct FGraph {
    int domain_size = 0;
    std::vector<FunctionTable> vertices;
    std::vector<FGraphEdge> edges;

    Graph skeleton() const;
};

FGraph build_f_graph(const RelStructure& b, const IndicatorLimits& limits = {});

bool check_fgraph_edge(const RelStructure& b, const FunctionTable& f1,
                       const FunctionTable& f2, const FunctionTable& witness);

// A 3-coloring of the F-graph certifies a minion homomorphism from Pol(b)
// to the projection clone; exhaustion certifies there is none.
std::optional<std::vector<int>> minion_hom_to_p(const RelStructure& b,
                                                const IndicatorLimits& limits = {});

struct QnuCheckResult {
    bool hom_exists = false;
    std::vector<int> hom;   // map V(g) -> quotient classes when it exists
    Graph quotient;
    ClassMap classes;
};

// Builds the n-ary quasi-near-unanimity quotient of h and searches for a
// homomorphism from g into it. For n > |E(g)| and g not mapping into h,
// the verdict is guaranteed to be no-hom.
QnuCheckResult qnu_quotient_check(const Graph& g, const Graph& h, int n,
                                  const IndicatorLimits& limits = {});

} // namespace h1

#endif
