#include "doctest.h"

#include <stdexcept>

#include "h1/growth.hpp"
#include "h1/indicator.hpp"

using namespace h1;

TEST_CASE("growth schedule for a single K4") {
    GrowthResult r = growth_g({4}, mpz_class(1000000));
    REQUIRE(r.g.size() == 2);
    CHECK(r.g[0] == 1);
    CHECK(r.k[0] == 576);
    CHECK(r.g[1] == 577);
    // exact defining inequality at the returned threshold
    CHECK(growth_inequality_holds({4}, r.g, r.k[0]));
    // direct big-integer evaluation: 576^4 < 3^24
    mpz_class lhs, rhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), 576, 4);
    mpz_ui_pow_ui(rhs.get_mpz_t(), 3, 24);
    CHECK(lhs < rhs);
    CHECK(lhs == mpz_class("110075314176"));
    CHECK(rhs == mpz_class("282429536481"));
}

TEST_CASE("two-step schedule is strictly increasing and verifies exactly") {
    GrowthResult r = growth_g({4, 16}, mpz_class("1000000000000"));
    REQUIRE(r.g.size() == 3);
    CHECK(r.g[0] == 1);
    for (std::size_t i = 0; i + 1 < r.g.size(); ++i) CHECK(r.g[i + 1] > r.g[i]);
    for (std::size_t n = 1; n <= 2; ++n) {
        std::vector<long long> prefix{4, 16};
        prefix.resize(n);
        CHECK(growth_inequality_holds(prefix, r.g, r.k[n - 1]));
        CHECK(r.g[n] == r.k[n - 1] + 1);
    }
}

TEST_CASE("k_max guard fires before gigantic thresholds") {
    CHECK_THROWS_AS(growth_g({4, 16}, mpz_class(10000)), resource_limit_error);
    CHECK_THROWS_AS(growth_g({}, mpz_class(100)), std::invalid_argument);
    CHECK_THROWS_AS(growth_g({0}, mpz_class(100)), std::invalid_argument);
}

TEST_CASE("inequality replay is independent of the schedule construction") {
    // a value below the certified threshold where the plain inequality
    // still fails: 20^4 = 160000 >= 3^5 = 243 is false, so it must reject
    std::vector<mpz_class> g{1};
    CHECK(!growth_inequality_holds({4}, g, mpz_class(20)));
    CHECK(growth_inequality_holds({4}, g, mpz_class(576)));
    // 575 also satisfies the plain inequality (ceil sqrt is still 24);
    // the schedule nevertheless starts at 576 where the monotone
    // certificate first fires
    CHECK(growth_inequality_holds({4}, g, mpz_class(575)));
}
