#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "cgh/random.hpp"

using namespace cgh;

TEST_CASE("same seed gives the same hypergraph", "[random]") {
    CHECK(random_cgh(10, 3, 0.4, 99) == random_cgh(10, 3, 0.4, 99));
    CHECK_FALSE(random_cgh(10, 3, 0.4, 99) == random_cgh(10, 3, 0.4, 100));
}

TEST_CASE("derived seeds are distinct per index", "[random]") {
    std::set<std::uint64_t> seeds;
    for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(derive_seed(7, i));
    CHECK(seeds.size() == 1000);
    CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}

TEST_CASE("edge probability extremes", "[random]") {
    CHECK(random_cgh(7, 3, 0.0, 1).empty());
    CHECK(random_cgh(7, 3, 1.0, 1).size() == 35);
}

TEST_CASE("edge density matches p", "[random]") {
    // 200 draws of C(12,4) = 495 trials each; binomial standard error.
    double total = 0;
    const double p = 0.3, trials = 200 * 495.0;
    for (std::uint64_t s = 0; s < 200; ++s) total += static_cast<double>(random_cgh(12, 4, p, s).size());
    const double se = std::sqrt(trials * p * (1 - p));
    CHECK(std::abs(total - trials * p) < 4 * se);
}

TEST_CASE("uniform_below stays in range and covers it", "[random]") {
    Rng rng(5);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) {
        auto x = uniform_below(rng, 7);
        REQUIRE(x < 7);
        ++hits[x];
    }
    for (int h : hits) CHECK(h > 800);
}

TEST_CASE("invalid probabilities are rejected", "[random]") {
    CHECK_THROWS_AS(random_cgh(5, 2, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_cgh(5, 2, 1.5, 1), std::invalid_argument);
}
