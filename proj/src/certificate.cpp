#include "h1/certificate.hpp"

#include <algorithm>
#include <sstream>

#include "h1/enumerate.hpp"
#include "h1/growth.hpp"
#include "h1/hom.hpp"
#include "h1/io.hpp"
#include "h1/rel_structure.hpp"

namespace h1 {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json graph_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    j["edges"] = ordered_json::array();
    for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

Graph graph_from_json(const json& j) {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

ordered_json condition_json_obj(const HeightOneCondition& c) {
    return ordered_json::parse(condition_to_json(c));
}

HeightOneCondition condition_from_json_obj(const json& j) {
    return condition_from_json(j.dump());
}

ordered_json table_json(const FunctionTable& t) {
    ordered_json j;
    j["arity"] = t.arity;
    j["domain"] = t.domain_size;
    j["values"] = t.table;
    return j;
}

FunctionTable table_from_json(const json& j) {
    FunctionTable t;
    t.arity = j.at("arity").get<int>();
    t.domain_size = j.at("domain").get<int>();
    t.table = j.at("values").get<std::vector<int>>();
    return t;
}

ordered_json gadget_json(const Gadget& g) {
    ordered_json j;
    j["graph"] = graph_json(g.graph);
    j["marks"] = {g.x, g.xp, g.y, g.yp};
    j["d"] = {g.d.first, g.d.second};
    return j;
}

Gadget gadget_from_json(const json& j) {
    Gadget g;
    g.graph = graph_from_json(j.at("graph"));
    g.x = j.at("marks").at(0).get<int>();
    g.xp = j.at("marks").at(1).get<int>();
    g.y = j.at("marks").at(2).get<int>();
    g.yp = j.at("marks").at(3).get<int>();
    g.d = {j.at("d").at(0).get<int>(), j.at("d").at(1).get<int>()};
    return g;
}

ordered_json fgraph_json(const FGraph& f) {
    ordered_json j;
    j["domain"] = f.domain_size;
    j["vertices"] = ordered_json::array();
    for (const auto& v : f.vertices) j["vertices"].push_back(table_json(v));
    j["edges"] = ordered_json::array();
    for (const auto& e : f.edges) {
        ordered_json je;
        je["a"] = e.a;
        je["b"] = e.b;
        je["witness"] = table_json(e.witness);
        j["edges"].push_back(std::move(je));
    }
    return j;
}

std::string file_digest(const std::string& content) {
    return "fnv1a64:" + digest_hex(fnv1a64(content));
}

namespace {

struct Inputs {
    std::vector<std::string> contents;
};

// re-reads and digest-checks every input file named by the envelope
Inputs reload_inputs(const json& env, VerifyOutcome& out) {
    Inputs in;
    if (!env.contains("inputs")) return in;
    for (const auto& item : env.at("inputs")) {
        std::string path = item.at("path").get<std::string>();
        std::string content = read_file(path);
        if (file_digest(content) != item.at("digest").get<std::string>()) {
            out.detail = "digest mismatch for " + path;
            return in;
        }
        in.contents.push_back(std::move(content));
    }
    out.pass = true;
    return in;
}

bool graphs_equal(const Graph& a, const Graph& b) { return a == b; }

} // namespace

VerifyOutcome verify_envelope(const json& env) {
    VerifyOutcome out;
    const std::string command = env.at("command").get<std::string>();
    const std::string answer = env.at("answer").is_string()
                                   ? env.at("answer").get<std::string>()
                                   : std::string("value");

    VerifyOutcome load;
    Inputs in = reload_inputs(env, load);
    if (env.contains("inputs") && !load.pass) {
        out.detail = load.detail;
        return out;
    }
    const json witness = env.contains("witness") ? env.at("witness") : json();
    const json params = env.contains("params") ? env.at("params") : json::object();

    auto ok = [&](const std::string& what) {
        out.pass = true;
        out.detail = what;
        return out;
    };
    auto fail = [&](const std::string& what) {
        out.pass = false;
        out.detail = what;
        return out;
    };

    if (command == "sigma") {
        Graph g = read_graph(in.contents.at(0));
        HeightOneCondition c = condition_from_json_obj(witness.at("condition"));
        if (sigma_of_graph(g) == c) return ok("condition matches reconstruction");
        return fail("condition differs from reconstruction");
    }
    if (command == "qnu") {
        HeightOneCondition c = condition_from_json_obj(witness.at("condition"));
        if (sigma_qnu(params.at("n").get<int>()) == c) return ok("condition matches");
        return fail("condition differs from reconstruction");
    }
    if (command == "combine") {
        HeightOneCondition a = condition_from_json(in.contents.at(0));
        HeightOneCondition b = condition_from_json(in.contents.at(1));
        HeightOneCondition c = condition_from_json_obj(witness.at("condition"));
        if (combine(a, b) == c) return ok("condition matches");
        return fail("condition differs from reconstruction");
    }
    if (command == "trivial") {
        HeightOneCondition c = condition_from_json(in.contents.at(0));
        c.normalize();
        if (answer == "yes") {
            ProjectionWitness w(c.symbols.size(), -1);
            for (std::size_t s = 0; s < c.symbols.size(); ++s)
                w[s] = witness.at("projection").at(c.symbols[s].name).get<int>();
            if (check_projection_witness(c, w)) return ok("projection witness replays");
            return fail("projection witness fails replay");
        }
        if (is_trivial(c)) return fail("search found a witness, answer said none");
        return ok("non-triviality reconfirmed by search");
    }
    if (command == "hom" || command == "color3" || command == "css") {
        Graph g = read_graph(in.contents.at(0));
        Graph h = command == "color3" ? k3() : read_graph(in.contents.at(1));
        bool claimed = command == "css" ? answer == "reject" : answer == "yes";
        if (claimed) {
            auto key = command == "color3" ? "coloring" : "map";
            std::vector<int> map = witness.at(key).get<std::vector<int>>();
            if (is_homomorphism(g, h, map)) return ok("homomorphism replays");
            return fail("claimed map is not a homomorphism");
        }
        if (find_hom(g, h)) return fail("search found a homomorphism");
        return ok("exhaustion reconfirmed by search");
    }
    if (command == "satisfies") {
        RelStructure b = read_template(in.contents.at(0));
        HeightOneCondition c = condition_from_json(in.contents.at(1));
        c.normalize();
        if (answer == "yes") {
            std::vector<FunctionTable> tables;
            for (const auto& tj : witness.at("tables")) tables.push_back(table_from_json(tj));
            if (check_tables(b, c, tables)) return ok("witness tables replay");
            return fail("witness tables fail replay");
        }
        if (satisfies(b, c).sat) return fail("search found witness tables");
        return ok("exhaustion reconfirmed by search");
    }
    if (command == "fgraph") {
        RelStructure b = read_template(in.contents.at(0));
        FGraph f = build_f_graph(b);
        if (fgraph_json(f) == witness.at("fgraph")) return ok("F-graph matches recomputation");
        return fail("F-graph differs from recomputation");
    }
    if (command == "minion-p") {
        RelStructure b = read_template(in.contents.at(0));
        FGraph f = build_f_graph(b);
        if (answer == "yes") {
            auto coloring = witness.at("coloring").get<std::vector<int>>();
            if (is_proper_3coloring(f.skeleton(), coloring))
                return ok("coloring replays on recomputed F-graph");
            return fail("coloring is not proper on recomputed F-graph");
        }
        if (three_color(f.skeleton())) return fail("recomputed F-graph is 3-colorable");
        return ok("exhaustion reconfirmed on recomputed F-graph");
    }
    if (command == "qnu-check") {
        Graph g = read_graph(in.contents.at(0));
        Graph h = read_graph(in.contents.at(1));
        auto [q, cm] = qnu_quotient(h, params.at("n").get<int>());
        if (answer == "hom") {
            auto map = witness.at("map").get<std::vector<int>>();
            if (is_homomorphism(g, q, map)) return ok("homomorphism into quotient replays");
            return fail("claimed map is not a homomorphism into the quotient");
        }
        if (find_hom(g, q)) return fail("search found a homomorphism into the quotient");
        return ok("no-hom reconfirmed by search");
    }
    if (command == "critical") {
        Graph g = read_graph(in.contents.at(0));
        if (answer == "no") {
            if (three_color(g)) return ok("input reconfirmed 3-colorable");
            return fail("input is not 3-colorable, a critical pair exists");
        }
        Graph sub = graph_from_json(witness.at("subgraph"));
        auto ej = witness.at("edge");
        std::pair<int, int> e{ej.at(0).get<int>(), ej.at(1).get<int>()};
        if (sub.vertex_count() != g.vertex_count()) return fail("subgraph vertex count differs");
        for (const auto& [u, v] : sub.edges())
            if (!g.has_edge(u, v)) return fail("subgraph has an edge outside the input");
        if (!sub.has_edge(e.first, e.second)) return fail("edge missing from subgraph");
        auto coloring = witness.at("relaxed_coloring").get<std::vector<int>>();
        Graph relaxed = sub;
        relaxed.remove_edge(e.first, e.second);
        if (!is_proper_3coloring(relaxed, coloring))
            return fail("relaxed coloring fails replay");
        if (three_color(sub)) return fail("subgraph is 3-colorable");
        return ok("criticality replays, non-3-colorability reconfirmed");
    }
    if (command == "gadget-verify") {
        Gadget g;
        {
            GadgetFile gf = read_gadget(in.contents.at(0));
            g = {gf.graph, gf.x, gf.xp, gf.y, gf.yp, gf.d};
        }
        GadgetCheck check = verify_gadget(g);
        bool claimed = answer == "pass";
        if (check.pass == claimed) return ok("gadget check reconfirmed");
        return fail("gadget check disagrees with the answer");
    }
    if (command == "gadget-search") {
        if (answer == "yes") {
            Gadget g = gadget_from_json(witness.at("gadget"));
            if (verify_gadget(g).pass) return ok("returned gadget re-verifies");
            return fail("returned gadget fails verification");
        }
        auto found = search_gadget(params.at("max_vertices").get<int>(),
                                   params.at("budget").get<long long>());
        if (found) return fail("re-run search found a gadget");
        return ok("failed search reconfirmed");
    }
    if (command == "glue") {
        Graph g = read_graph(in.contents.at(0));
        Graph h = read_graph(in.contents.at(1));
        GadgetFile gf = read_gadget(in.contents.at(2));
        Gadget n{gf.graph, gf.x, gf.xp, gf.y, gf.yp, gf.d};
        std::pair<int, int> e{params.at("e").at(0).get<int>(), params.at("e").at(1).get<int>()};
        std::pair<int, int> f{params.at("f").at(0).get<int>(), params.at("f").at(1).get<int>()};
        GlueResult r = glue(g, e, h, f, n);
        if (!graphs_equal(r.w, graph_from_json(witness.at("graph"))))
            return fail("glued graph differs from recomputation");
        if (witness.at("d").at(0).get<int>() != r.d.first ||
            witness.at("d").at(1).get<int>() != r.d.second)
            return fail("marked edge differs from recomputation");
        return ok("glue result matches recomputation");
    }
    if (command == "sigma-perm") {
        auto sigma = sigma_permutation(params.at("i").get<int>(), params.at("j").get<int>());
        auto claimed = witness.at("sigma").get<std::vector<int>>();
        if (std::equal(sigma.begin(), sigma.end(), claimed.begin(), claimed.end()))
            return ok("permutation matches recomputation");
        return fail("permutation differs from recomputation");
    }
    if (command == "chain-tensor" || command == "chain-glue") {
        const Graph* prev = nullptr;
        Graph prev_graph;
        for (const auto& sj : witness.at("steps")) {
            Graph g = graph_from_json(sj.at("graph"));
            if (three_color(g)) return fail("a chain step is 3-colorable");
            if (command == "chain-tensor" && prev) {
                auto proj = sj.at("projection").get<std::vector<int>>();
                if (!is_homomorphism(g, *prev, proj))
                    return fail("a chain projection fails replay");
            }
            if (command == "chain-glue") {
                auto dj = sj.at("d");
                Graph relaxed = g;
                relaxed.remove_edge(dj.at(0).get<int>(), dj.at(1).get<int>());
                auto coloring = sj.at("relaxed_coloring").get<std::vector<int>>();
                if (!is_proper_3coloring(relaxed, coloring))
                    return fail("a chain step's critical-edge coloring fails replay");
            }
            prev_graph = std::move(g);
            prev = &prev_graph;
        }
        return ok("all chain steps re-validate");
    }
    if (command == "growth") {
        auto sizes = params.at("sizes").get<std::vector<long long>>();
        std::vector<mpz_class> g, k;
        for (const auto& s : witness.at("g").get<std::vector<std::string>>()) g.emplace_back(s);
        for (const auto& s : witness.at("k").get<std::vector<std::string>>()) k.emplace_back(s);
        if (g.size() != sizes.size() + 1 || k.size() != sizes.size())
            return fail("growth schedule has wrong length");
        if (g[0] != 1) return fail("g(1) must be 1");
        for (std::size_t i = 0; i + 1 < g.size(); ++i)
            if (g[i + 1] <= g[i]) return fail("schedule is not strictly increasing");
        for (std::size_t n = 1; n <= sizes.size(); ++n) {
            if (g[n] != k[n - 1] + 1) return fail("g(n+1) must be k_n + 1");
            std::vector<long long> prefix(sizes.begin(), sizes.begin() + n);
            if (!growth_inequality_holds(prefix, g, k[n - 1]))
                return fail("defining inequality fails at k_" + std::to_string(n));
        }
        return ok("growth schedule replays exactly");
    }
    return fail("unknown command in envelope: " + command);
}

} // namespace h1
