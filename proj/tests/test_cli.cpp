#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#include "h1/certificate.hpp"
#include "h1/graph.hpp"
#include "h1/io.hpp"

using namespace h1;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_tool(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(H1KIT_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string tmp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

void put(const std::string& path, const std::string& content) {
    write_file(path, content);
}

} // namespace

TEST_CASE("color3 answers and verifies through the envelope") {
    put(tmp_path("k4.graph"), write_graph(complete_graph(4)));
    put(tmp_path("pet.graph"), write_graph(petersen_graph()));

    auto no = run_tool("color3 " + tmp_path("k4.graph"));
    CHECK(no.exit_code == 0);
    json envelope = json::parse(no.out);
    CHECK(envelope.at("answer") == "no");
    CHECK(verify_envelope(envelope).pass);

    auto yes = run_tool("color3 " + tmp_path("pet.graph"));
    json env2 = json::parse(yes.out);
    CHECK(env2.at("answer") == "yes");
    CHECK(verify_envelope(env2).pass);

    // tampered witness must fail verification
    env2["witness"]["coloring"][0] = env2["witness"]["coloring"][1];
    CHECK(!verify_envelope(env2).pass);
}

TEST_CASE("identical invocations are byte-identical") {
    put(tmp_path("k3.graph"), write_graph(k3()));
    auto a = run_tool("sigma " + tmp_path("k3.graph"));
    auto b = run_tool("sigma " + tmp_path("k3.graph"));
    CHECK(a.out == b.out);
    CHECK(verify_envelope(json::parse(a.out)).pass);
}

TEST_CASE("trivial command round trip") {
    put(tmp_path("k3.graph"), write_graph(k3()));
    auto sigma = run_tool("sigma " + tmp_path("k3.graph"));
    json cond = json::parse(sigma.out).at("witness").at("condition");
    put(tmp_path("k3cond.json"), cond.dump());
    auto trivial = run_tool("trivial " + tmp_path("k3cond.json"));
    json env = json::parse(trivial.out);
    CHECK(env.at("answer") == "yes");
    CHECK(verify_envelope(env).pass);
}

TEST_CASE("exit codes distinguish input errors and guards") {
    CHECK(run_tool("frobnicate").exit_code == 2);
    put(tmp_path("bad.graph"), "p graph x\n");
    CHECK(run_tool("color3 " + tmp_path("bad.graph")).exit_code == 2);
    put(tmp_path("k5.graph"), write_graph(complete_graph(5)));
    put(tmp_path("k4cond.json"),
        condition_to_json(sigma_of_graph(complete_graph(4))));
    // domain-5 indicator instance with 6-ary symbols exceeds a tiny cap
    CHECK(run_tool("--max-vars 100 satisfies " + tmp_path("k5.graph") + " " +
                   tmp_path("k4cond.json"))
              .exit_code == 3);
}

TEST_CASE("qnu and sigma-perm envelopes verify") {
    auto qnu = run_tool("qnu 3");
    CHECK(verify_envelope(json::parse(qnu.out)).pass);
    auto perm = run_tool("sigma-perm 1 3");
    json env = json::parse(perm.out);
    CHECK(env.at("witness").at("sigma") == json({3, 5, 1, 6, 2, 4}));
    CHECK(verify_envelope(env).pass);
}

TEST_CASE("growth envelope verifies") {
    auto growth = run_tool("growth 1000000 4");
    json env = json::parse(growth.out);
    CHECK(env.at("witness").at("g") == json({"1", "577"}));
    CHECK(verify_envelope(env).pass);
}

TEST_CASE("css envelopes verify both ways") {
    put(tmp_path("k4.graph"), write_graph(complete_graph(4)));
    put(tmp_path("k5.graph"), write_graph(complete_graph(5)));
    put(tmp_path("pet.graph"), write_graph(petersen_graph()));
    json reject = json::parse(run_tool("css " + tmp_path("k4.graph") + " " +
                                       tmp_path("k5.graph")).out);
    CHECK(reject.at("answer") == "reject");
    CHECK(verify_envelope(reject).pass);
    json accept = json::parse(run_tool("css " + tmp_path("k4.graph") + " " +
                                       tmp_path("pet.graph")).out);
    CHECK(accept.at("answer") == "accept");
    CHECK(verify_envelope(accept).pass);
}

TEST_CASE("chain-tensor writes per-step artifacts") {
    auto chain = run_tool("chain-tensor 2 4 -o " + tmp_path("chaindir"));
    json env = json::parse(chain.out);
    CHECK(env.at("witness").at("steps").size() == 2);
    CHECK(verify_envelope(env).pass);
    Graph step2 = read_graph(read_file(tmp_path("chaindir") + "/step_2.graph"));
    CHECK(step2.vertex_count() == 16);
    json cert = json::parse(read_file(tmp_path("chaindir") + "/step_2.cert.json"));
    CHECK(cert.at("projection").size() == 16);
}
