// Command-line frontend: every decision procedure of the library, each
// invocation emitting one machine-readable certificate envelope on stdout.
// Logs go to stderr. Exit codes: 0 answered (either way), 2 input error,
// 3 resource guard tripped.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "h1/certificate.hpp"
#include "h1/chains.hpp"
#include "h1/conditions.hpp"
#include "h1/enumerate.hpp"
#include "h1/graph.hpp"
#include "h1/growth.hpp"
#include "h1/hom.hpp"
#include "h1/indicator.hpp"
#include "h1/io.hpp"
#include "h1/rel_structure.hpp"

using nlohmann::ordered_json;

namespace {

struct Options {
    long long max_vars = 500000;
    long long max_vertices = 100000;
    long long budget = 200000;
    int fgraph_domain_cap = 2;
    std::string format = "json";
    std::string out;
};

h1::IndicatorLimits limits_of(const Options& o) {
    h1::IndicatorLimits lim;
    lim.max_vars = o.max_vars;
    lim.fgraph_domain_cap = o.fgraph_domain_cap;
    return lim;
}

struct Envelope {
    ordered_json j;

    explicit Envelope(const std::string& command) {
        j["command"] = command;
        j["inputs"] = ordered_json::array();
        j["params"] = ordered_json::object();
    }
    std::string add_input(const std::string& path) {
        std::string content = h1::read_file(path);
        j["inputs"].push_back({{"path", path}, {"digest", h1::file_digest(content)}});
        return content;
    }
    void answer(const std::string& a) { j["answer"] = a; }
    void finish() {
        ordered_json out;
        out["command"] = j["command"];
        out["inputs"] = j["inputs"];
        out["params"] = j["params"];
        out["answer"] = j.contains("answer") ? j["answer"] : ordered_json("value");
        out["witness"] = j.contains("witness") ? j["witness"] : ordered_json(nullptr);
        out["version"] = h1::kToolVersion;
        std::cout << out.dump(2) << std::endl;
    }
};

ordered_json projection_json(const h1::HeightOneCondition& c, const h1::ProjectionWitness& w) {
    ordered_json out;
    for (std::size_t s = 0; s < c.symbols.size(); ++s) out[c.symbols[s].name] = w[s];
    return out;
}

void write_chain_outputs(const std::string& dir, const ordered_json& steps) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    int i = 1;
    for (const auto& step : steps) {
        h1::Graph g = h1::graph_from_json(step.at("graph"));
        h1::write_file(dir + "/step_" + std::to_string(i) + ".graph", h1::write_graph(g));
        h1::write_file(dir + "/step_" + std::to_string(i) + ".cert.json", step.dump(2));
        ++i;
    }
}

int dispatch(const std::string& cmd, const std::vector<std::string>& args,
             const Options& opt) {
    Envelope env(cmd);

    if (cmd == "sigma") {
        h1::Graph g = h1::read_graph(env.add_input(args[0]));
        env.j["witness"]["condition"] = h1::condition_json_obj(h1::sigma_of_graph(g));
    } else if (cmd == "qnu") {
        int n = std::stoi(args[0]);
        env.j["params"]["n"] = n;
        env.j["witness"]["condition"] = h1::condition_json_obj(h1::sigma_qnu(n));
    } else if (cmd == "trivial") {
        h1::HeightOneCondition c = h1::condition_from_json(env.add_input(args[0]));
        c.normalize();
        auto w = h1::is_trivial(c);
        env.answer(w ? "yes" : "no");
        if (w) env.j["witness"]["projection"] = projection_json(c, *w);
    } else if (cmd == "combine") {
        h1::HeightOneCondition a = h1::condition_from_json(env.add_input(args[0]));
        h1::HeightOneCondition b = h1::condition_from_json(env.add_input(args[1]));
        env.j["witness"]["condition"] = h1::condition_json_obj(h1::combine(a, b));
    } else if (cmd == "hom") {
        h1::Graph g = h1::read_graph(env.add_input(args[0]));
        h1::Graph h = h1::read_graph(env.add_input(args[1]));
        auto m = h1::find_hom(g, h);
        env.answer(m ? "yes" : "no");
        if (m) env.j["witness"]["map"] = *m;
    } else if (cmd == "color3") {
        h1::Graph g = h1::read_graph(env.add_input(args[0]));
        auto c = h1::three_color(g);
        env.answer(c ? "yes" : "no");
        if (c) env.j["witness"]["coloring"] = *c;
    } else if (cmd == "satisfies") {
        h1::RelStructure b = h1::read_template(env.add_input(args[0]));
        h1::HeightOneCondition c = h1::condition_from_json(env.add_input(args[1]));
        c.normalize();
        auto res = h1::satisfies(b, c, limits_of(opt));
        env.answer(res.sat ? "yes" : "no");
        if (res.sat) {
            env.j["witness"]["tables"] = ordered_json::array();
            for (std::size_t s = 0; s < res.tables.size(); ++s) {
                ordered_json t = h1::table_json(res.tables[s]);
                t["symbol"] = c.symbols[s].name;
                env.j["witness"]["tables"].push_back(std::move(t));
            }
        }
    } else if (cmd == "fgraph") {
        h1::RelStructure b = h1::read_template(env.add_input(args[0]));
        h1::FGraph f = h1::build_f_graph(b, limits_of(opt));
        env.j["witness"]["fgraph"] = h1::fgraph_json(f);
    } else if (cmd == "minion-p") {
        h1::RelStructure b = h1::read_template(env.add_input(args[0]));
        auto coloring = h1::minion_hom_to_p(b, limits_of(opt));
        env.answer(coloring ? "yes" : "no");
        if (coloring) env.j["witness"]["coloring"] = *coloring;
    } else if (cmd == "qnu-check") {
        h1::Graph g = h1::read_graph(env.add_input(args[0]));
        h1::Graph h = h1::read_graph(env.add_input(args[1]));
        int n = std::stoi(args[2]);
        env.j["params"]["n"] = n;
        auto res = h1::qnu_quotient_check(g, h, n, limits_of(opt));
        env.answer(res.hom_exists ? "hom" : "no-hom");
        env.j["witness"]["classes"] = res.classes.class_count();
        if (res.hom_exists) env.j["witness"]["map"] = res.hom;
    } else if (cmd == "chain-tensor") {
        int k = std::stoi(args[0]);
        int max_n = std::stoi(args[1]);
        env.j["params"]["k"] = k;
        env.j["params"]["max_n"] = max_n;
        auto steps = h1::tensor_chain(k, max_n, opt.max_vertices);
        env.j["witness"]["steps"] = ordered_json::array();
        for (const auto& s : steps) {
            ordered_json sj;
            sj["graph"] = h1::graph_json(s.graph);
            sj["noncol_digest"] = h1::digest_hex(s.noncol_digest);
            sj["projection"] = s.projection;
            env.j["witness"]["steps"].push_back(std::move(sj));
        }
        write_chain_outputs(opt.out, env.j["witness"]["steps"]);
    } else if (cmd == "chain-glue") {
        int k = std::stoi(args[0]);
        h1::GadgetFile gf = h1::read_gadget(env.add_input(args[1]));
        int max_n = std::stoi(args[2]);
        env.j["params"]["k"] = k;
        env.j["params"]["max_n"] = max_n;
        h1::Gadget gadget{gf.graph, gf.x, gf.xp, gf.y, gf.yp, gf.d};
        auto steps = h1::glue_chain(k, gadget, max_n, opt.max_vertices);
        env.j["witness"]["steps"] = ordered_json::array();
        for (const auto& s : steps) {
            ordered_json sj;
            sj["graph"] = h1::graph_json(s.graph);
            sj["d"] = {s.d.first, s.d.second};
            sj["noncol_digest"] = h1::digest_hex(s.noncol_digest);
            sj["relaxed_coloring"] = s.relaxed_coloring;
            env.j["witness"]["steps"].push_back(std::move(sj));
        }
        write_chain_outputs(opt.out, env.j["witness"]["steps"]);
    } else if (cmd == "critical") {
        h1::Graph g = h1::read_graph(env.add_input(args[0]));
        auto res = h1::find_critical(g);
        env.answer(res ? "yes" : "no");
        if (res) {
            env.j["witness"]["subgraph"] = h1::graph_json(res->subgraph);
            env.j["witness"]["edge"] = {res->edge.first, res->edge.second};
            h1::Graph relaxed = res->subgraph;
            relaxed.remove_edge(res->edge.first, res->edge.second);
            env.j["witness"]["relaxed_coloring"] = *h1::three_color(relaxed);
        }
    } else if (cmd == "gadget-verify") {
        h1::GadgetFile gf = h1::read_gadget(env.add_input(args[0]));
        h1::Gadget gadget{gf.graph, gf.x, gf.xp, gf.y, gf.yp, gf.d};
        auto check = h1::verify_gadget(gadget);
        env.answer(check.pass ? "pass" : "fail");
        if (!check.pass) {
            env.j["witness"]["failed_property"] = check.failed_property;
            env.j["witness"]["counterexample"] = check.counterexample;
        }
    } else if (cmd == "gadget-search") {
        int max_vertices = std::stoi(args[0]);
        env.j["params"]["max_vertices"] = max_vertices;
        env.j["params"]["budget"] = opt.budget;
        auto gadget = h1::search_gadget(max_vertices, opt.budget);
        env.answer(gadget ? "yes" : "no");
        if (gadget) {
            env.j["witness"]["gadget"] = h1::gadget_json(*gadget);
            if (!opt.out.empty())
                h1::write_file(opt.out, h1::write_gadget({gadget->graph, gadget->x,
                                                          gadget->xp, gadget->y,
                                                          gadget->yp, gadget->d}));
        }
    } else if (cmd == "glue") {
        h1::Graph g = h1::read_graph(env.add_input(args[0]));
        std::pair<int, int> e{std::stoi(args[1]) - 1, std::stoi(args[2]) - 1};
        h1::Graph h = h1::read_graph(env.add_input(args[3]));
        std::pair<int, int> f{std::stoi(args[4]) - 1, std::stoi(args[5]) - 1};
        h1::GadgetFile gf = h1::read_gadget(env.add_input(args[6]));
        h1::Gadget gadget{gf.graph, gf.x, gf.xp, gf.y, gf.yp, gf.d};
        env.j["params"]["e"] = {e.first, e.second};
        env.j["params"]["f"] = {f.first, f.second};
        auto res = h1::glue(g, e, h, f, gadget);
        env.j["witness"]["graph"] = h1::graph_json(res.w);
        env.j["witness"]["d"] = {res.d.first, res.d.second};
        if (!opt.out.empty()) h1::write_file(opt.out, h1::write_graph(res.w));
    } else if (cmd == "sigma-perm") {
        int i = std::stoi(args[0]), j = std::stoi(args[1]);
        env.j["params"]["i"] = i;
        env.j["params"]["j"] = j;
        auto sigma = h1::sigma_permutation(i, j);
        env.j["witness"]["sigma"] = std::vector<int>(sigma.begin(), sigma.end());
    } else if (cmd == "css") {
        h1::Graph g = h1::read_graph(env.add_input(args[0]));
        h1::Graph input = h1::read_graph(env.add_input(args[1]));
        auto res = h1::css_decide(g, input);
        for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
        env.answer(res.accept ? "accept" : "reject");
        if (!res.accept) env.j["witness"]["map"] = res.witness;
    } else if (cmd == "growth") {
        mpz_class k_max(args[0]);
        std::vector<long long> sizes;
        for (std::size_t i = 1; i < args.size(); ++i) sizes.push_back(std::stoll(args[i]));
        env.j["params"]["k_max"] = args[0];
        env.j["params"]["sizes"] = sizes;
        auto res = h1::growth_g(sizes, k_max);
        std::vector<std::string> gs, ks;
        for (const auto& v : res.g) gs.push_back(v.get_str());
        for (const auto& v : res.k) ks.push_back(v.get_str());
        env.j["witness"]["g"] = gs;
        env.j["witness"]["k"] = ks;
    } else if (cmd == "verify") {
        nlohmann::json target = nlohmann::json::parse(env.add_input(args[0]));
        auto outcome = h1::verify_envelope(target);
        env.answer(outcome.pass ? "yes" : "no");
        env.j["witness"]["detail"] = outcome.detail;
    } else {
        std::cerr << "unknown subcommand: " << cmd << "\n";
        return 2;
    }

    env.finish();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"finite toolkit for graph-encoded height-1 conditions"};
    app.option_defaults()->always_capture_default();
    app.add_option("--max-vars", opt.max_vars, "indicator variable cap");
    app.add_option("--max-vertices", opt.max_vertices, "chain vertex cap");
    app.add_option("--budget", opt.budget, "gadget search budget");
    app.add_option("--fgraph-domain-cap", opt.fgraph_domain_cap,
                   "clone enumeration domain cap");
    app.add_option("--format", opt.format, "output format (json)");
    app.add_option("-o,--out", opt.out, "output file or directory");

    struct Sub {
        const char* name;
        const char* desc;
        std::size_t min_args;
        std::size_t max_args;
    };
    const std::vector<Sub> subs = {
        {"sigma", "condition of a graph", 1, 1},
        {"qnu", "quasi-near-unanimity condition of arity n", 1, 1},
        {"trivial", "label-cover triviality of a condition", 1, 1},
        {"combine", "combination of two conditions", 2, 2},
        {"hom", "homomorphism between two graphs", 2, 2},
        {"color3", "3-coloring of a graph", 1, 1},
        {"satisfies", "condition satisfaction in a polymorphism clone", 2, 2},
        {"fgraph", "graph on the ternary clone members", 1, 1},
        {"minion-p", "minion homomorphism to projections", 1, 1},
        {"qnu-check", "homomorphism into the qnu quotient", 3, 3},
        {"chain-tensor", "tensor chain of non-3-colorable graphs", 2, 2},
        {"chain-glue", "glued chain of critical graphs", 3, 3},
        {"critical", "critical-edge reduction", 1, 1},
        {"gadget-verify", "exhaustive gadget property check", 1, 1},
        {"gadget-search", "gadget synthesis", 1, 1},
        {"glue", "glue two graphs at critical edges", 7, 7},
        {"sigma-perm", "pattern-aligning permutation", 2, 2},
        {"css", "membership for the forbidden-image class", 2, 2},
        {"growth", "growth schedule from orbit bounds", 2, 64},
        {"verify", "re-validate a certificate envelope", 1, 1},
    };

    std::vector<std::vector<std::string>> sub_args(subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) {
        auto* sc = app.add_subcommand(subs[i].name, subs[i].desc);
        sc->fallthrough(); // global flags may follow the subcommand
        sc->add_option("args", sub_args[i], "arguments")
            ->expected(static_cast<int>(subs[i].min_args),
                       static_cast<int>(subs[i].max_args));
    }
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (std::size_t i = 0; i < subs.size(); ++i)
            if (app.get_subcommand(subs[i].name)->parsed())
                return dispatch(subs[i].name, sub_args[i], opt);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const h1::resource_limit_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const h1::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
