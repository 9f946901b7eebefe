#include "h1/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "h1/hom.hpp"

namespace h1 {

namespace {

int pair_bit(int n, int u, int v) {
    // upper-triangle bit layout: (0,1),(0,2),...,(0,n-1),(1,2),...
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

} // namespace

std::uint64_t canonical_mask(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 12) throw std::length_error("canonical_mask: too many vertices");
    auto adj = g.adjacency_matrix();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ULL;
    do {
        std::uint64_t m = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adj[perm[u]][perm[v]]) m |= 1ULL << pair_bit(n, u, v);
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph graph_of_mask(int n, std::uint64_t mask) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (mask >> pair_bit(n, u, v) & 1) g.add_edge(u, v);
    return g;
}

bool isomorphic_small(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    return canonical_mask(a) == canonical_mask(b);
}

std::vector<Graph> all_graphs_up_to_iso(int n, bool connected_only) {
    if (n < 1 || n > 8) throw std::length_error("all_graphs_up_to_iso: 1..8 vertices");
    const int bits = n * (n - 1) / 2;
    std::vector<std::uint64_t> canon;
    for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
        Graph g = graph_of_mask(n, mask);
        if (connected_only && !g.is_connected()) continue;
        canon.push_back(canonical_mask(g));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    std::vector<Graph> out;
    out.reserve(canon.size());
    for (std::uint64_t m : canon) out.push_back(graph_of_mask(n, m));
    return out;
}

std::vector<Graph> enumerate_non_3col(int max_n) {
    if (max_n < 1) throw std::invalid_argument("enumerate_non_3col: max_n must be >= 1");
    if (max_n > 8) throw std::length_error("enumerate_non_3col: brute force caps at 8 vertices");
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        const int bits = n * (n - 1) / 2;
        std::vector<std::uint64_t> canon;
        for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
            Graph g = graph_of_mask(n, mask);
            if (!g.is_connected()) continue;
            if (three_color(g)) continue;
            canon.push_back(canonical_mask(g));
        }
        std::sort(canon.begin(), canon.end());
        canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
        for (std::uint64_t m : canon) out.push_back(graph_of_mask(n, m));
    }
    return out;
}

} // namespace h1
