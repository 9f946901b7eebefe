#ifndef H1_GRAPH_HPP
#define H1_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace h1 {

// Finite undirected graph on vertices 0..n-1. Loops allowed. Edges are
// stored canonically as (min,max) pairs, without duplicates.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Canonicalizes to (min,max); inserting an existing edge is a no-op.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;
    bool has_loop() const;

    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    std::vector<std::pair<int, int>> edge_list() const;

    std::vector<std::vector<bool>> adjacency_matrix() const;
    std::vector<std::vector<int>> neighbor_lists() const;

    bool is_connected() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::set<std::pair<int, int>> edges_;
};

Graph complete_graph(int k);
Graph cycle_graph(int k);
Graph k3();
Graph petersen_graph();
Graph single_loop_graph();

// Factor map of a quotient of the set of n-tuples over some base domain.
// Tuples are indexed in mixed radix with the first coordinate most
// significant. Class ids are dense, ordered by smallest member tuple.
struct ClassMap {
    long long source_size = 0;
    std::vector<int> class_of;                  // tuple index -> class
    std::vector<std::vector<int>> representative; // class -> tuple

    int class_count() const { return static_cast<int>(representative.size()); }
};

// Mixed-radix helpers shared by powers, quotients and function tables.
long long tuple_index(const std::vector<int>& t, int radix);
std::vector<int> tuple_of_index(long long idx, int radix, int len);

Graph tensor_product(const Graph& g, const Graph& h);

// n-fold tensor power, n >= 1. Vertex (a_1,...,a_n) gets the mixed-radix
// index with a_1 most significant.
Graph power(const Graph& g, int n);

// Quotient of the n-th power by the equivalence generated by identifying,
// for every pair (x,y), the almost-constant tuples
// {(y,x,...,x), ..., (x,...,x,y)} with the constant tuple (x,...,x).
// For n = 1 the relation is equality and the graph is returned unchanged.
std::pair<Graph, ClassMap> qnu_quotient(const Graph& h, int n);

// All set partitions of {0,...,2n-1} into fewer than 2n blocks, i.e. every
// partition except the all-singletons one, as restricted growth strings in
// lexicographic order.
std::vector<std::vector<int>> loop_like_patterns(int n);

} // namespace h1

#endif
