#include "h1/hom.hpp"

namespace h1 {

CspInstance hom_instance(const Graph& g, const Graph& h) {
    CspInstance inst;
    inst.var_count = g.vertex_count();
    inst.domain_size = h.vertex_count();

    std::vector<std::vector<int>> oriented;
    for (const auto& [a, b] : h.edges()) {
        oriented.push_back({a, b});
        if (a != b) oriented.push_back({b, a});
    }
    std::sort(oriented.begin(), oriented.end());

    std::vector<std::vector<int>> loops;
    for (const auto& [a, b] : h.edges())
        if (a == b) loops.push_back({a});

    for (const auto& [u, v] : g.edges()) {
        if (u == v)
            inst.constraints.push_back({{u}, loops});
        else
            inst.constraints.push_back({{u, v}, oriented});
    }
    return inst;
}

std::optional<std::vector<int>> find_hom(const Graph& g, const Graph& h) {
    Certificate cert = solve(hom_instance(g, h));
    if (!cert.is_sat()) return std::nullopt;
    return cert.payload;
}

std::optional<std::vector<int>> three_color(const Graph& g) {
    return find_hom(g, k3());
}

bool is_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != g.vertex_count()) return false;
    for (int x : map)
        if (x < 0 || x >= h.vertex_count()) return false;
    for (const auto& [u, v] : g.edges())
        if (!h.has_edge(map[u], map[v])) return false;
    return true;
}

bool is_proper_3coloring(const Graph& g, const std::vector<int>& coloring) {
    return is_homomorphism(g, k3(), coloring);
}

std::vector<std::vector<int>> all_3colorings(const Graph& g) {
    std::vector<std::vector<int>> out;
    const int n = g.vertex_count();
    auto adj = g.adjacency_matrix();
    for (int v = 0; v < n; ++v)
        if (adj[v][v]) return out; // a loop kills every coloring
    std::vector<int> c(n, -1);
    // backtracking enumeration, lexicographic
    int v = 0;
    if (n == 0) return {std::vector<int>{}};
    while (v >= 0) {
        ++c[v];
        if (c[v] > 2) {
            c[v] = -1;
            --v;
            continue;
        }
        bool ok = true;
        for (int w = 0; w < v && ok; ++w)
            if (adj[v][w] && c[w] == c[v]) ok = false;
        if (!ok) continue;
        if (v == n - 1)
            out.push_back(c);
        else
            ++v;
    }
    return out;
}

} // namespace h1
