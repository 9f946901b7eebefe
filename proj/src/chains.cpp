#include "h1/chains.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "h1/enumerate.hpp"
#include "h1/hom.hpp"

namespace h1 {

namespace {

// pins c(v)=val on top of a 3-coloring instance
void pin(CspInstance& inst, int v, int val) {
    inst.constraints.push_back({{v}, {{val}}});
}

bool extends(const CspInstance& base, const std::array<int, 4>& verts,
             const std::array<int, 4>& boundary) {
    CspInstance inst = base;
    for (int i = 0; i < 4; ++i) pin(inst, verts[i], boundary[i]);
    return solve(inst).is_sat();
}

std::vector<std::array<int, 4>> boundary_maps(bool xdiff, bool ydiff) {
    std::vector<std::array<int, 4>> out;
    for (int cx = 0; cx < 3; ++cx)
        for (int cxp = 0; cxp < 3; ++cxp)
            for (int cy = 0; cy < 3; ++cy)
                for (int cyp = 0; cyp < 3; ++cyp)
                    if ((cx != cxp) == xdiff && (cy != cyp) == ydiff)
                        out.push_back({cx, cxp, cy, cyp});
    return out;
}

} // namespace

GadgetCheck verify_gadget(const Gadget& g) {
    const int n = g.graph.vertex_count();
    for (int v : {g.x, g.xp, g.y, g.yp})
        if (v < 0 || v >= n)
            throw std::invalid_argument("verify_gadget: mark out of range");
    {
        std::array<int, 4> m = {g.x, g.xp, g.y, g.yp};
        std::sort(m.begin(), m.end());
        if (std::adjacent_find(m.begin(), m.end()) != m.end())
            throw std::invalid_argument("verify_gadget: marks must be distinct");
    }
    if (!g.graph.has_edge(g.d.first, g.d.second))
        throw std::invalid_argument("verify_gadget: d is not an edge");

    GadgetCheck res;

    // P1: exactly one inequality in every proper coloring
    for (const auto& c : all_3colorings(g.graph)) {
        bool xdiff = c[g.x] != c[g.xp];
        bool ydiff = c[g.y] != c[g.yp];
        if (xdiff == ydiff) {
            res.failed_property = "P1";
            res.counterexample = c;
            return res;
        }
    }

    const std::array<int, 4> verts = {g.x, g.xp, g.y, g.yp};
    CspInstance whole = hom_instance(g.graph, k3());

    // P2: every one-inequality boundary map extends to the whole gadget
    for (bool xdiff : {true, false})
        for (const auto& bm : boundary_maps(xdiff, !xdiff))
            if (!extends(whole, verts, bm)) {
                res.failed_property = "P2";
                res.counterexample.assign(bm.begin(), bm.end());
                return res;
            }

    // P3: every equal-pairs boundary map extends to the gadget minus d
    Graph relaxed = g.graph;
    relaxed.remove_edge(g.d.first, g.d.second);
    CspInstance rinst = hom_instance(relaxed, k3());
    for (const auto& bm : boundary_maps(false, false))
        if (!extends(rinst, verts, bm)) {
            res.failed_property = "P3";
            res.counterexample.assign(bm.begin(), bm.end());
            return res;
        }

    res.pass = true;
    return res;
}

namespace {

// Candidate edge slots for a gadget part on n vertices with marks 0,1,2,3:
// within-pair and cross-boundary edges are excluded, a boundary map that
// colors their endpoints equally could never extend across them.
std::vector<std::pair<int, int>> candidate_slots(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (u < 4 && v < 4) continue;
            slots.push_back({u, v});
        }
    return slots;
}

Graph graph_of_slots(int n, const std::vector<std::pair<int, int>>& slots,
                     std::uint64_t mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
    return g;
}

// The synthesis decomposes the gadget into parts meeting only in the
// boundary. A boundary map extends to a union of parts exactly when it
// extends to each part, and a coloring of the union restricts to each
// part, so extension duties must hold per part while kill duties may be
// distributed:
//   part A  kills every both-unequal boundary, extends the rest;
//   part B  kills every both-equal boundary, extends every exactly-one
//           boundary, and revives both-equal once its edge d is removed.

int count_part_a_violations(const Graph& graph) {
    const std::array<int, 4> verts = {0, 1, 2, 3};
    CspInstance whole = hom_instance(graph, k3());
    int bad = 0;
    for (const auto& bm : boundary_maps(true, true))
        if (extends(whole, verts, bm)) ++bad;
    for (const auto& bm : boundary_maps(false, false))
        if (!extends(whole, verts, bm)) ++bad;
    for (bool xdiff : {true, false})
        for (const auto& bm : boundary_maps(xdiff, !xdiff))
            if (!extends(whole, verts, bm)) ++bad;
    return bad;
}

struct ScoredB {
    int score = -1;
    std::pair<int, int> best_d{-1, -1};
};

ScoredB score_part_b(const Graph& graph) {
    ScoredB out;
    const std::array<int, 4> verts = {0, 1, 2, 3};
    CspInstance whole = hom_instance(graph, k3());
    int base = 0;
    for (const auto& bm : boundary_maps(false, false))
        if (extends(whole, verts, bm)) ++base;
    for (bool xdiff : {true, false})
        for (const auto& bm : boundary_maps(xdiff, !xdiff))
            if (!extends(whole, verts, bm)) ++base;

    int best_p3 = 9;
    for (const auto& e : graph.edges()) {
        Graph relaxed = graph;
        relaxed.remove_edge(e.first, e.second);
        CspInstance rinst = hom_instance(relaxed, k3());
        int fails = 0;
        for (const auto& bm : boundary_maps(false, false))
            if (!extends(rinst, verts, bm)) ++fails;
        if (fails < best_p3) {
            best_p3 = fails;
            out.best_d = e;
        }
        if (fails == 0) break;
    }
    out.score = base + best_p3;
    return out;
}

// Union over the shared boundary; the second part's internals are shifted
// past the first's.
Graph union_over_boundary(const Graph& a, const Graph& b, std::vector<int>* b_map) {
    const int ia = a.vertex_count() - 4;
    Graph out(a.vertex_count() + b.vertex_count() - 4);
    for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
    for (const auto& [u, v] : b.edges())
        out.add_edge(u < 4 ? u : u + ia, v < 4 ? v : v + ia);
    if (b_map) {
        b_map->resize(b.vertex_count());
        for (int v = 0; v < b.vertex_count(); ++v) (*b_map)[v] = v < 4 ? v : v + ia;
    }
    return out;
}

// Part A synthesis: a blocker is three internals (m1 adjacent to x and x',
// m2 to y and y', t to a chosen subset of {x,x',y,y',m1,m2}). Admissible
// blockers extend all 45 exactly-one and both-equal maps; their kill sets
// over the 36 both-unequal maps are covered exactly by a small union of
// blockers with disjoint internals.
std::optional<Graph> synthesize_part_a(long long& budget) {
    const std::array<int, 4> verts = {0, 1, 2, 3};
    auto blocker_graph = [](unsigned subset) {
        Graph g(7); // x x' y y' m1 m2 t
        g.add_edge(0, 4);
        g.add_edge(1, 4);
        g.add_edge(2, 5);
        g.add_edge(3, 5);
        const int targets[6] = {0, 1, 2, 3, 4, 5};
        for (int i = 0; i < 6; ++i)
            if (subset >> i & 1) g.add_edge(6, targets[i]);
        return g;
    };
    auto unequal = boundary_maps(true, true);
    struct Blocker {
        unsigned subset;
        std::uint64_t kills;
    };
    std::vector<Blocker> admissible;
    for (unsigned subset = 0; subset < 64; ++subset) {
        if (budget-- <= 0) return std::nullopt;
        Graph g = blocker_graph(subset);
        CspInstance whole = hom_instance(g, k3());
        bool live_ok = true;
        for (const auto& bm : boundary_maps(false, false))
            if (!extends(whole, verts, bm)) live_ok = false;
        for (bool xdiff : {true, false})
            for (const auto& bm : boundary_maps(xdiff, !xdiff))
                if (live_ok && !extends(whole, verts, bm)) live_ok = false;
        if (!live_ok) continue;
        std::uint64_t kills = 0;
        for (std::size_t i = 0; i < unequal.size(); ++i)
            if (!extends(whole, verts, unequal[i])) kills |= 1ULL << i;
        if (kills) admissible.push_back({subset, kills});
    }
    // depth-first cover of the 36 patterns by at most four blockers
    const std::uint64_t full = (1ULL << unequal.size()) - 1;
    std::vector<unsigned> chosen;
    auto cover = [&](auto&& self, std::uint64_t covered, std::size_t from,
                     int depth) -> bool {
        if (covered == full) return true;
        if (depth == 0) return false;
        for (std::size_t i = from; i < admissible.size(); ++i) {
            if ((admissible[i].kills | covered) == covered) continue;
            chosen.push_back(admissible[i].subset);
            if (self(self, covered | admissible[i].kills, i + 1, depth - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!cover(cover, 0, 0, 4)) return std::nullopt;

    Graph part(4);
    for (unsigned subset : chosen)
        part = union_over_boundary(part, blocker_graph(subset), nullptr);
    if (count_part_a_violations(part) != 0) return std::nullopt;
    return part;
}

// Part B synthesis: split two non-adjacent vertices of a 4-critical graph.
// The doubly contracted candidate is the critical graph again, so every
// both-equal boundary map dies; the partition of the split neighbourhoods
// governs the extension properties and is scanned exhaustively.
std::optional<std::pair<Graph, std::pair<int, int>>> synthesize_part_b(
    int max_base_vertices, long long& budget) {
    std::vector<Graph> bases;
    auto mycielski = [](const Graph& g) {
        const int n = g.vertex_count();
        Graph m(2 * n + 1);
        for (const auto& [u, v] : g.edges()) {
            m.add_edge(u, v);
            m.add_edge(u, n + v);
            m.add_edge(v, n + u);
        }
        for (int v = 0; v < n; ++v) m.add_edge(n + v, 2 * n);
        return m;
    };
    for (int cyc = 5; cyc <= 7; cyc += 2) {
        Graph m = mycielski(cycle_graph(cyc));
        if (m.vertex_count() + 2 <= max_base_vertices + 2) bases.push_back(m);
    }
    for (int rim = 5; rim <= 7; rim += 2) {
        Graph w(rim + 1);
        for (int i = 0; i < rim; ++i) {
            w.add_edge(i, (i + 1) % rim);
            w.add_edge(i, rim);
        }
        bases.push_back(w);
    }
    bases.push_back(complete_graph(4));

    for (const auto& base : bases) {
        const int n = base.vertex_count();
        if (n + 2 > max_base_vertices + 2) continue;
        auto nb = base.neighbor_lists();
        for (int bx = 0; bx < n; ++bx)
            for (int by = 0; by < n; ++by) {
                if (bx == by || base.has_edge(bx, by)) continue;
                const int dx = static_cast<int>(nb[bx].size());
                const int dy = static_cast<int>(nb[by].size());
                if (dx > 6 || dy > 6) continue;
                for (unsigned mx = 1; mx + 1 < (1u << dx); ++mx)
                    for (unsigned my = 1; my + 1 < (1u << dy); ++my) {
                        if (budget-- <= 0) return std::nullopt;
                        Graph cand(n + 2);
                        std::vector<int> rel(n, -1);
                        int next = 4;
                        for (int v = 0; v < n; ++v)
                            if (v != bx && v != by) rel[v] = next++;
                        for (const auto& [u, v] : base.edges()) {
                            if (u != bx && u != by && v != bx && v != by) {
                                cand.add_edge(rel[u], rel[v]);
                                continue;
                            }
                            int split = (u == bx || u == by) ? u : v;
                            int other = (split == u) ? v : u;
                            const auto& lst = nb[split];
                            int idx = static_cast<int>(
                                std::find(lst.begin(), lst.end(), other) - lst.begin());
                            int half = split == bx ? ((mx >> idx & 1) ? 0 : 1)
                                                   : ((my >> idx & 1) ? 2 : 3);
                            cand.add_edge(half, rel[other]);
                        }
                        auto scored = score_part_b(cand);
                        if (scored.score == 0)
                            return std::make_pair(cand, scored.best_d);
                    }
            }
    }
    return std::nullopt;
}

// Whole-graph exhaustive search, feasible for at most two internals.
std::optional<Gadget> exhaustive_gadget(int n, long long& budget) {
    auto slots = candidate_slots(n);
    const int m = static_cast<int>(slots.size());
    const std::array<int, 4> verts = {0, 1, 2, 3};
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        if (budget-- <= 0) return std::nullopt;
        Graph g = graph_of_slots(n, slots, mask);
        if (g.edge_count() == 0) continue;
        CspInstance whole = hom_instance(g, k3());
        bool dead = false;
        for (const auto& bm : boundary_maps(false, false))
            if (extends(whole, verts, bm)) {
                dead = true;
                break;
            }
        if (dead) continue;
        auto scored = score_part_b(g);
        if (scored.score != 0 || count_part_a_violations(g) != 0) continue;
        Gadget gg{g, 0, 1, 2, 3, scored.best_d};
        if (verify_gadget(gg).pass) return gg;
    }
    return std::nullopt;
}

} // namespace

std::optional<Gadget> search_gadget(int max_vertices, long long budget) {
    if (max_vertices < 5)
        throw std::invalid_argument("search_gadget: need at least 5 vertices");

    // small sizes are settled exhaustively
    for (int n = 5; n <= std::min(max_vertices, 6); ++n) {
        auto g = exhaustive_gadget(n, budget);
        if (g) return g;
        if (budget <= 0) return std::nullopt;
    }

    auto part_a = synthesize_part_a(budget);
    if (!part_a) return std::nullopt;
    auto part_b = synthesize_part_b(max_vertices - part_a->vertex_count() + 2, budget);
    if (!part_b) return std::nullopt;
    if (part_a->vertex_count() + part_b->first.vertex_count() - 4 > max_vertices)
        return std::nullopt;

    std::vector<int> b_map;
    Gadget g;
    g.graph = union_over_boundary(*part_a, part_b->first, &b_map);
    g.x = 0;
    g.xp = 1;
    g.y = 2;
    g.yp = 3;
    g.d = {std::min(b_map[part_b->second.first], b_map[part_b->second.second]),
           std::max(b_map[part_b->second.first], b_map[part_b->second.second])};
    if (!verify_gadget(g).pass) return std::nullopt;
    return g;
}

std::optional<CriticalResult> find_critical(const Graph& g) {
    if (three_color(g)) return std::nullopt;
    Graph current = g;
    while (true) {
        auto e = *current.edges().begin(); // lexicographically first edge
        Graph next = current;
        next.remove_edge(e.first, e.second);
        if (three_color(next)) return CriticalResult{current, e};
        current = std::move(next);
    }
}

const std::array<std::array<int, 6>, 3>& sigma_patterns() {
    static const std::array<std::array<int, 6>, 3> p = {{
        {0, 1, 0, 2, 1, 2}, // (x,y,x,z,y,z)
        {1, 0, 2, 0, 2, 1}, // (y,x,z,x,z,y)
        {2, 2, 1, 1, 0, 0}, // (z,z,y,y,x,x)
    }};
    return p;
}

std::array<int, 6> sigma_permutation(int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3)
        throw std::invalid_argument("sigma_permutation: patterns are 1..3");
    if (i == j)
        throw std::invalid_argument("sigma_permutation: patterns must differ");
    const auto& p = sigma_patterns();
    const auto& t = p[0]; // columns of (t,s) index the substitution
    const auto& s = p[1];
    std::array<int, 6> sigma{};
    for (int k = 0; k < 6; ++k) {
        int found = -1;
        for (int pos = 0; pos < 6; ++pos)
            if (t[pos] == p[i - 1][k] && s[pos] == p[j - 1][k]) {
                found = pos;
                break;
            }
        if (found < 0)
            throw std::logic_error("sigma_permutation: pattern pair has no matching column");
        sigma[k] = found + 1;
    }
    return sigma;
}

GlueResult glue(const Graph& g, std::pair<int, int> e, const Graph& h,
                std::pair<int, int> f, const Gadget& n) {
    if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("glue: e is not an edge of g");
    if (!h.has_edge(f.first, f.second))
        throw std::invalid_argument("glue: f is not an edge of h");
    if (e.first == e.second || f.first == f.second)
        throw std::invalid_argument("glue: cannot glue at a loop");

    const int ng = g.vertex_count(), nh = h.vertex_count();
    const int nn = n.graph.vertex_count();
    GlueResult out;
    out.w = Graph(ng + nh + nn - 4);

    for (const auto& [u, v] : g.edges())
        if (std::minmax(u, v) != std::minmax(e.first, e.second)) out.w.add_edge(u, v);
    for (const auto& [u, v] : h.edges())
        if (std::minmax(u, v) != std::minmax(f.first, f.second))
            out.w.add_edge(u + ng, v + ng);

    // gadget boundary lands on the freed edge endpoints, internals follow
    std::vector<int> map(nn, -1);
    map[n.x] = std::min(e.first, e.second);
    map[n.xp] = std::max(e.first, e.second);
    map[n.y] = std::min(f.first, f.second) + ng;
    map[n.yp] = std::max(f.first, f.second) + ng;
    int next = ng + nh;
    for (int v = 0; v < nn; ++v)
        if (map[v] < 0) map[v] = next++;
    for (const auto& [u, v] : n.graph.edges()) out.w.add_edge(map[u], map[v]);

    out.d = {std::min(map[n.d.first], map[n.d.second]),
             std::max(map[n.d.first], map[n.d.second])};
    return out;
}

namespace {

std::uint64_t noncol_exhaustion_digest(const Graph& g) {
    CspInstance inst = hom_instance(g, k3());
    Certificate cert = solve(inst);
    if (cert.is_sat())
        throw std::logic_error("chain step unexpectedly 3-colorable");
    return cert.instance_digest;
}

} // namespace

std::vector<TensorChainStep> tensor_chain(int k, int max_n, long long max_vertices) {
    if (k < 1) throw std::invalid_argument("tensor_chain: k must be >= 1");
    auto base = enumerate_non_3col(max_n);
    if (base.empty())
        throw std::invalid_argument("tensor_chain: no non-3-colorable graph with <= " +
                                    std::to_string(max_n) + " vertices");
    std::vector<TensorChainStep> steps;
    Graph current = base[0];
    for (int i = 0; i < k; ++i) {
        if (i > 0) {
            const Graph& factor = base[i % base.size()];
            if (static_cast<long long>(current.vertex_count()) * factor.vertex_count() >
                max_vertices)
                throw resource_limit_error("tensor_chain: next step exceeds " +
                                           std::to_string(max_vertices) + " vertices");
            Graph product = tensor_product(current, factor);
            TensorChainStep step;
            step.projection.resize(product.vertex_count());
            for (int v = 0; v < product.vertex_count(); ++v)
                step.projection[v] = v / factor.vertex_count();
            if (!is_homomorphism(product, current, step.projection))
                throw std::logic_error("tensor_chain: projection failed validation");
            current = std::move(product);
            step.graph = current;
            step.noncol_digest = noncol_exhaustion_digest(current);
            steps.push_back(std::move(step));
        } else {
            steps.push_back({current, noncol_exhaustion_digest(current), {}});
        }
    }
    return steps;
}

std::vector<GlueChainStep> glue_chain(int k, const Gadget& gadget, int max_n,
                                      long long max_vertices) {
    if (k < 1) throw std::invalid_argument("glue_chain: k must be >= 1");
    auto check = verify_gadget(gadget);
    if (!check.pass)
        throw std::invalid_argument("glue_chain: gadget fails " + check.failed_property);
    auto base = enumerate_non_3col(max_n);
    if (base.empty())
        throw std::invalid_argument("glue_chain: no non-3-colorable graph with <= " +
                                    std::to_string(max_n) + " vertices");

    std::vector<GlueChainStep> steps;
    auto push_step = [&](const Graph& w, std::pair<int, int> d) {
        GlueChainStep step;
        step.graph = w;
        step.d = d;
        step.noncol_digest = noncol_exhaustion_digest(w);
        Graph relaxed = w;
        relaxed.remove_edge(d.first, d.second);
        auto col = three_color(relaxed);
        if (!col) throw std::logic_error("glue_chain: marked edge is not critical");
        step.relaxed_coloring = *col;
        steps.push_back(std::move(step));
    };

    auto first = find_critical(base[0]);
    push_step(first->subgraph, first->edge);
    for (int i = 1; i < k; ++i) {
        auto reduced = find_critical(base[i % base.size()]);
        const auto& prev = steps.back();
        if (prev.graph.vertex_count() + reduced->subgraph.vertex_count() +
                gadget.graph.vertex_count() - 4 >
            max_vertices)
            throw resource_limit_error("glue_chain: next step exceeds " +
                                       std::to_string(max_vertices) + " vertices");
        GlueResult g = glue(prev.graph, prev.d, reduced->subgraph, reduced->edge, gadget);
        push_step(g.w, g.d);
    }
    return steps;
}

CssResult css_decide(const Graph& g, const Graph& input) {
    CssResult res;
    if (!g.is_connected()) res.warnings.push_back("pattern graph is not connected");
    if (g.has_loop()) res.warnings.push_back("pattern graph has a loop");
    else if (three_color(g)) res.warnings.push_back("pattern graph is 3-colorable");
    CspInstance inst = hom_instance(g, input);
    Certificate cert = solve(inst);
    res.search_digest = cert.instance_digest;
    if (cert.is_sat()) {
        res.accept = false;
        res.witness = cert.payload;
    } else {
        res.accept = true;
    }
    return res;
}

} // namespace h1
