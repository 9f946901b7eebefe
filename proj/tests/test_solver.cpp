#include "doctest.h"

#include <random>

#include "h1/csp.hpp"
#include "h1/graph.hpp"
#include "h1/hom.hpp"

using namespace h1;

namespace {

// full-enumeration oracle, checked with its own constraint scan
bool brute_force_sat(const CspInstance& inst) {
    long long total = 1;
    for (int i = 0; i < inst.var_count; ++i) total *= inst.domain_size;
    std::vector<int> assign(inst.var_count, 0);
    for (long long a = 0; a < total; ++a) {
        long long x = a;
        for (int i = inst.var_count - 1; i >= 0; --i) {
            assign[i] = static_cast<int>(x % inst.domain_size);
            x /= inst.domain_size;
        }
        bool ok = true;
        for (const auto& [p, q] : inst.equalities)
            if (assign[p] != assign[q]) ok = false;
        for (const auto& c : inst.constraints) {
            if (!ok) break;
            bool hit = false;
            for (const auto& t : c.allowed) {
                bool match = true;
                for (std::size_t i = 0; i < c.scope.size(); ++i)
                    if (assign[c.scope[i]] != t[i]) {
                        match = false;
                        break;
                    }
                if (match) {
                    hit = true;
                    break;
                }
            }
            ok = hit;
        }
        if (ok) return true;
    }
    return false;
}

CspInstance random_instance(std::mt19937& rng) {
    CspInstance inst;
    inst.var_count = 2 + static_cast<int>(rng() % 9);
    inst.domain_size = 2 + static_cast<int>(rng() % 2);
    int ncons = 1 + static_cast<int>(rng() % 8);
    for (int c = 0; c < ncons; ++c) {
        CspConstraint con;
        int arity = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < arity; ++i)
            con.scope.push_back(static_cast<int>(rng() % inst.var_count));
        long long space = 1;
        for (int i = 0; i < arity; ++i) space *= inst.domain_size;
        for (long long t = 0; t < space; ++t)
            if (rng() % 3 != 0) {
                std::vector<int> tup(arity);
                long long x = t;
                for (int i = arity - 1; i >= 0; --i) {
                    tup[i] = static_cast<int>(x % inst.domain_size);
                    x /= inst.domain_size;
                }
                con.allowed.push_back(std::move(tup));
            }
        inst.constraints.push_back(std::move(con));
    }
    int neq = static_cast<int>(rng() % 3);
    for (int i = 0; i < neq; ++i)
        inst.equalities.push_back({static_cast<int>(rng() % inst.var_count),
                                   static_cast<int>(rng() % inst.var_count)});
    return inst;
}

} // namespace

TEST_CASE("single free variable takes the first domain value") {
    CspInstance inst;
    inst.var_count = 1;
    inst.domain_size = 2;
    Certificate cert = solve(inst);
    REQUIRE(cert.is_sat());
    CHECK(cert.payload == std::vector<int>{0});
    CHECK(check_assignment(inst, cert.payload));
}

TEST_CASE("equality against an asymmetric constraint is exhausted") {
    CspInstance inst;
    inst.var_count = 2;
    inst.domain_size = 2;
    inst.constraints.push_back({{0, 1}, {{0, 1}}});
    inst.equalities.push_back({0, 1});
    Certificate cert = solve(inst);
    CHECK(!cert.is_sat());
    CHECK(cert.instance_digest == digest_instance(inst));
}

TEST_CASE("3-coloring K4 as a CSP is exhausted") {
    CspInstance inst = hom_instance(complete_graph(4), k3());
    CHECK(!solve(inst).is_sat());
}

TEST_CASE("homomorphism searches") {
    auto id = find_hom(k3(), k3());
    REQUIRE(id);
    CHECK(is_homomorphism(k3(), k3(), *id));
    CHECK(!find_hom(complete_graph(4), k3()));
    auto c5 = find_hom(cycle_graph(5), k3());
    REQUIRE(c5);
    CHECK(is_homomorphism(cycle_graph(5), k3(), *c5));
}

TEST_CASE("three_color basics") {
    CHECK(three_color(k3()));
    CHECK(!three_color(single_loop_graph()));
    CHECK(!three_color(power(complete_graph(4), 2)));
    auto c = three_color(petersen_graph());
    REQUIRE(c);
    CHECK(is_proper_3coloring(petersen_graph(), *c));
}

TEST_CASE("solver agrees with the full-enumeration oracle") {
    std::mt19937 rng(20240817);
    for (int round = 0; round < 400; ++round) {
        CspInstance inst = random_instance(rng);
        Certificate cert = solve(inst);
        bool oracle = brute_force_sat(inst);
        CHECK(cert.is_sat() == oracle);
        if (cert.is_sat()) CHECK(check_assignment(inst, cert.payload));
    }
}

TEST_CASE("identical instances yield identical certificates") {
    std::mt19937 rng(7);
    for (int round = 0; round < 50; ++round) {
        CspInstance inst = random_instance(rng);
        Certificate a = solve(inst);
        Certificate b = solve(inst);
        CHECK(a.kind == b.kind);
        CHECK(a.payload == b.payload);
        CHECK(a.instance_digest == b.instance_digest);
    }
}

TEST_CASE("equality merging does not change verdicts") {
    std::mt19937 rng(99);
    for (int round = 0; round < 120; ++round) {
        CspInstance inst = random_instance(rng);
        Certificate merged = solve(inst, {.merge_equalities = true});
        Certificate plain = solve(inst, {.merge_equalities = false});
        CHECK(merged.is_sat() == plain.is_sat());
        if (merged.is_sat()) {
            CHECK(check_assignment(inst, merged.payload));
            CHECK(check_assignment(inst, plain.payload));
        }
    }
}

TEST_CASE("replay checker rejects corrupted assignments") {
    CspInstance inst = hom_instance(k3(), k3());
    Certificate cert = solve(inst);
    REQUIRE(cert.is_sat());
    auto bad = cert.payload;
    bad[0] = bad[1]; // adjacent vertices collide
    CHECK(!check_assignment(inst, bad));
    CHECK(!check_assignment(inst, std::vector<int>{}));
}
