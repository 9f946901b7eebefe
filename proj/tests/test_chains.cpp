#include "doctest.h"

#include <stdexcept>

#include <algorithm>
#include <numeric>
#include <set>

#include "h1/chains.hpp"
#include "h1/enumerate.hpp"
#include "h1/graph.hpp"
#include "h1/hom.hpp"
#include "h1/io.hpp"

using namespace h1;

namespace {

Gadget fixture_gadget() {
    GadgetFile gf = read_gadget(read_file(std::string(FIXTURE_DIR) + "/gadget.graph"));
    return {gf.graph, gf.x, gf.xp, gf.y, gf.yp, gf.d};
}

} // namespace

TEST_CASE("sigma pattern columns cover all ordered pairs of distinct variables") {
    const auto& p = sigma_patterns();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            std::set<std::pair<int, int>> pairs;
            for (int k = 0; k < 6; ++k) {
                CHECK(p[i][k] != p[j][k]);
                pairs.insert({p[i][k], p[j][k]});
            }
            CHECK(pairs.size() == 6);
        }
}

TEST_CASE("sigma permutations against the exhaustive oracle") {
    CHECK(sigma_permutation(1, 2) == std::array<int, 6>{1, 2, 3, 4, 5, 6});
    CHECK(sigma_permutation(1, 3) == std::array<int, 6>{3, 5, 1, 6, 2, 4});
    const auto& p = sigma_patterns();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) {
                CHECK_THROWS_AS(sigma_permutation(i, j), std::invalid_argument);
                continue;
            }
            // oracle: scan all 720 permutations for the matching condition
            std::array<int, 6> idx{0, 1, 2, 3, 4, 5};
            std::vector<std::array<int, 6>> matches;
            std::sort(idx.begin(), idx.end());
            do {
                bool ok = true;
                for (int k = 0; k < 6 && ok; ++k)
                    ok = p[0][idx[k]] == p[i - 1][k] && p[1][idx[k]] == p[j - 1][k];
                if (ok) matches.push_back(idx);
            } while (std::next_permutation(idx.begin(), idx.end()));
            REQUIRE(matches.size() == 1);
            auto sigma = sigma_permutation(i, j);
            for (int k = 0; k < 6; ++k) CHECK(sigma[k] == matches[0][k] + 1);
        }
}

TEST_CASE("find_critical on complete graphs") {
    auto r = find_critical(complete_graph(4));
    REQUIRE(r);
    CHECK(r->subgraph == complete_graph(4));
    CHECK(r->edge == std::make_pair(0, 1));
    Graph relaxed = r->subgraph;
    relaxed.remove_edge(0, 1);
    CHECK(three_color(relaxed));

    CHECK(!find_critical(k3()));
}

TEST_CASE("find_critical replays both defining properties") {
    Graph g = complete_graph(4);
    g = Graph(5);
    for (const auto& [u, v] : complete_graph(4).edges()) g.add_edge(u, v);
    g.add_edge(3, 4); // pendant vertex
    auto r = find_critical(g);
    REQUIRE(r);
    CHECK(!three_color(r->subgraph));
    for (const auto& [u, v] : r->subgraph.edges()) CHECK(g.has_edge(u, v));
    Graph relaxed = r->subgraph;
    relaxed.remove_edge(r->edge.first, r->edge.second);
    auto coloring = three_color(relaxed);
    REQUIRE(coloring);
    CHECK(is_proper_3coloring(relaxed, *coloring));
}

TEST_CASE("verify_gadget rejects unsuitable graphs") {
    // K3 with any marks: P2 fails (or P1, depending on the marks)
    Graph k4 = complete_graph(4);
    GadgetCheck check = verify_gadget({k4, 0, 1, 2, 3, {0, 1}});
    CHECK(!check.pass);
    CHECK(!check.failed_property.empty());
    CHECK(!check.counterexample.empty());

    // graphs with no coloring at all satisfy P1 vacuously but fail P2
    Graph k4loop = complete_graph(5);
    GadgetCheck c2 = verify_gadget({k4loop, 0, 1, 2, 3, {0, 1}});
    CHECK(!c2.pass);
    CHECK(c2.failed_property == "P2");

    CHECK_THROWS_AS(verify_gadget({k4, 0, 0, 2, 3, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_gadget({k4, 0, 1, 2, 3, {4, 5}}), std::out_of_range);
}

TEST_CASE("fixture gadget passes the exhaustive verification") {
    Gadget g = fixture_gadget();
    GadgetCheck check = verify_gadget(g);
    CHECK(check.pass);
    CHECK(check.failed_property.empty());
}

TEST_CASE("search refutes undersized gadgets exhaustively") {
    CHECK(!search_gadget(6, 3000000));
    CHECK_THROWS_AS(search_gadget(4, 100), std::invalid_argument);
}

TEST_CASE("glue on two K4 copies") {
    Gadget n = fixture_gadget();
    Graph k4 = complete_graph(4);
    GlueResult r = glue(k4, {0, 1}, k4, {0, 1}, n);
    CHECK(r.w.vertex_count() == 4 + 4 + n.graph.vertex_count() - 4);
    // the freed pairs stay non-edges
    CHECK(!r.w.has_edge(0, 1));
    CHECK(!r.w.has_edge(4, 5));
    CHECK(!three_color(r.w));
    Graph relaxed = r.w;
    relaxed.remove_edge(r.d.first, r.d.second);
    CHECK(three_color(relaxed));

    CHECK_THROWS_AS(glue(k4, {0, 0}, k4, {0, 1}, n), std::invalid_argument);
    CHECK_THROWS_AS(glue(Graph(3), {0, 1}, k4, {0, 1}, n), std::invalid_argument);
}

TEST_CASE("glued chain steps validate") {
    Gadget n = fixture_gadget();
    auto steps = glue_chain(2, n, 4);
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].graph == complete_graph(4));
    for (const auto& s : steps) {
        CHECK(!three_color(s.graph));
        Graph relaxed = s.graph;
        relaxed.remove_edge(s.d.first, s.d.second);
        CHECK(is_proper_3coloring(relaxed, s.relaxed_coloring));
    }
    CHECK(steps[1].graph.vertex_count() ==
          4 + 4 + n.graph.vertex_count() - 4);
}

TEST_CASE("tensor chain on K4 powers") {
    auto steps = tensor_chain(3, 4);
    REQUIRE(steps.size() == 3);
    CHECK(steps[0].graph == complete_graph(4));
    CHECK(steps[1].graph.vertex_count() == 16);
    CHECK(steps[2].graph.vertex_count() == 64);
    for (std::size_t i = 1; i < steps.size(); ++i)
        CHECK(is_homomorphism(steps[i].graph, steps[i - 1].graph, steps[i].projection));
    for (const auto& s : steps) CHECK(!three_color(s.graph));
    CHECK_THROWS_AS(tensor_chain(5, 4, 100), resource_limit_error);
    CHECK_THROWS_AS(tensor_chain(1, 3), std::invalid_argument);
}

TEST_CASE("tensor chain certificates pin the refuted instances") {
    auto steps = tensor_chain(2, 4);
    for (const auto& s : steps) {
        CspInstance inst = hom_instance(s.graph, k3());
        CHECK(s.noncol_digest == digest_instance(inst));
        CHECK(!solve(inst).is_sat());
    }
}

TEST_CASE("css membership") {
    Graph k4 = complete_graph(4);
    auto rej = css_decide(k4, complete_graph(5));
    CHECK(!rej.accept);
    CHECK(is_homomorphism(k4, complete_graph(5), rej.witness));

    auto acc = css_decide(k4, petersen_graph());
    CHECK(acc.accept);
    CHECK(acc.warnings.empty());

    auto warned = css_decide(k3(), complete_graph(5));
    CHECK(!warned.warnings.empty()); // K3 is 3-colorable, Forb(K3) trivializes
}

TEST_CASE("css accepts all 3-colorable inputs") {
    // a homomorphic image of K4 would transfer a 3-coloring back to K4
    for (int round = 0; round < 5; ++round) {
        Graph g(12);
        std::vector<int> cls(12);
        for (int v = 0; v < 12; ++v) cls[v] = v % 3;
        unsigned state = 12345u + round;
        for (int u = 0; u < 12; ++u)
            for (int v = u + 1; v < 12; ++v) {
                state = state * 1664525u + 1013904223u;
                if (cls[u] != cls[v] && state % 100 < 45) g.add_edge(u, v);
            }
        CHECK(css_decide(complete_graph(4), g).accept);
    }
}
