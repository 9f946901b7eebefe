#include "h1/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace h1 {

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    edges_.insert({u, v});
}

void Graph::remove_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    edges_.erase({u, v});
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return edges_.count({u, v}) > 0;
}

bool Graph::has_loop() const {
    for (const auto& [u, v] : edges_)
        if (u == v) return true;
    return false;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    return {edges_.begin(), edges_.end()};
}

std::vector<std::vector<bool>> Graph::adjacency_matrix() const {
    std::vector<std::vector<bool>> adj(n_, std::vector<bool>(n_, false));
    for (const auto& [u, v] : edges_) {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    return adj;
}

std::vector<std::vector<int>> Graph::neighbor_lists() const {
    std::vector<std::vector<int>> nb(n_);
    for (const auto& [u, v] : edges_) {
        nb[u].push_back(v);
        if (u != v) nb[v].push_back(u);
    }
    for (auto& l : nb) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    return nb;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    auto nb = neighbor_lists();
    std::vector<bool> seen(n_, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : nb[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n_;
}

Graph complete_graph(int k) {
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int k) {
    Graph g(k);
    for (int i = 0; i < k; ++i)
        g.add_edge(i, (i + 1) % k);
    return g;
}

Graph k3() { return complete_graph(3); }

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);     // outer cycle
        g.add_edge(i, i + 5);           // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return g;
}

Graph single_loop_graph() {
    Graph g(1);
    g.add_edge(0, 0);
    return g;
}

long long tuple_index(const std::vector<int>& t, int radix) {
    long long idx = 0;
    for (int a : t) idx = idx * radix + a;
    return idx;
}

std::vector<int> tuple_of_index(long long idx, int radix, int len) {
    std::vector<int> t(len);
    for (int i = len - 1; i >= 0; --i) {
        t[i] = static_cast<int>(idx % radix);
        idx /= radix;
    }
    return t;
}

Graph tensor_product(const Graph& g, const Graph& h) {
    Graph p(g.vertex_count() * h.vertex_count());
    auto id = [&](int a, int b) { return a * h.vertex_count() + b; };
    for (const auto& [a, c] : g.edges())
        for (const auto& [b, d] : h.edges()) {
            // both orientations of both edges
            p.add_edge(id(a, b), id(c, d));
            p.add_edge(id(a, d), id(c, b));
        }
    return p;
}

Graph power(const Graph& g, int n) {
    if (n < 1) throw std::invalid_argument("power: arity must be >= 1");
    Graph p = g;
    for (int i = 1; i < n; ++i) p = tensor_product(p, g);
    return p;
}

namespace {

// Union-find with smallest-element representatives on find-compressed paths.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(long long n) : parent(n) {
        for (long long i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a; // keep smallest index as root
    }
};

} // namespace

std::pair<Graph, ClassMap> qnu_quotient(const Graph& h, int n) {
    if (n < 1) throw std::invalid_argument("qnu_quotient: arity must be >= 1");
    const int d = h.vertex_count();
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= d;
        if (total > (1LL << 26))
            throw std::length_error("qnu_quotient: tuple space too large");
    }

    ClassMap cm;
    cm.source_size = total;

    if (n == 1) {
        cm.class_of.resize(d);
        for (int i = 0; i < d; ++i) {
            cm.class_of[i] = i;
            cm.representative.push_back({i});
        }
        return {h, cm};
    }

    UnionFind uf(total);
    std::vector<int> t(n);
    for (int x = 0; x < d; ++x) {
        std::fill(t.begin(), t.end(), x);
        const int constant = static_cast<int>(tuple_index(t, d));
        for (int y = 0; y < d; ++y) {
            if (y == x) continue;
            for (int pos = 0; pos < n; ++pos) {
                t[pos] = y;
                uf.unite(constant, static_cast<int>(tuple_index(t, d)));
                t[pos] = x;
            }
        }
    }

    // Dense class ids in order of smallest member; constant representatives
    // win inside their class because the constant tuple is identified with
    // every almost-constant one and roots are smallest members.
    cm.class_of.assign(total, -1);
    std::vector<int> root_class(total, -1);
    for (long long i = 0; i < total; ++i) {
        int r = uf.find(static_cast<int>(i));
        if (root_class[r] < 0) {
            root_class[r] = cm.class_count();
            cm.representative.push_back(tuple_of_index(r, d, n));
        }
        cm.class_of[i] = root_class[r];
    }
    // Prefer a constant representative when the class contains one; the
    // smallest constant wins if several were merged together.
    for (int x = d - 1; x >= 0; --x) {
        std::fill(t.begin(), t.end(), x);
        long long idx = tuple_index(t, d);
        cm.representative[cm.class_of[idx]] = t;
    }

    Graph q(cm.class_count());
    auto adj = h.adjacency_matrix();
    std::vector<int> flat(total * n);
    for (long long i = 0; i < total; ++i) {
        auto tup = tuple_of_index(i, d, n);
        std::copy(tup.begin(), tup.end(), flat.begin() + i * n);
    }
    for (long long i = 0; i < total; ++i) {
        const int* u = &flat[i * n];
        for (long long j = i; j < total; ++j) {
            const int* v = &flat[j * n];
            bool all = true;
            for (int p = 0; p < n && all; ++p) all = adj[u[p]][v[p]];
            if (all) q.add_edge(cm.class_of[i], cm.class_of[j]);
        }
    }
    return {q, cm};
}

std::vector<std::vector<int>> loop_like_patterns(int n) {
    if (n < 1) throw std::invalid_argument("loop_like_patterns: arity must be >= 1");
    const int m = 2 * n;
    std::vector<std::vector<int>> out;
    std::vector<int> rgs(m, 0);
    // enumerate restricted growth strings in lexicographic order
    while (true) {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (blocks < m) out.push_back(rgs);
        int i = m - 1;
        for (; i > 0; --i) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[i] < cap) {
                ++rgs[i];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                break;
            }
        }
        if (i == 0) break;
    }
    return out;
}

} // namespace h1
