#include <catch_amalgamated.hpp>

#include "cgh/constructions.hpp"
#include "cgh/patterns.hpp"
#include "cgh/random.hpp"
#include "oracles.hpp"

using namespace cgh;

namespace {

bool any_stack(const Cgh& h, std::size_t k) { return contains_stack(h, k) || contains_stack(reflect(h), k); }

}  // namespace

TEST_CASE("short pairs", "[constructions]") {
    auto rep = short_pairs_construction(10, 2, 3);
    CHECK(rep.edge_count == 20);
    CHECK(rep.cgh.size() == 20);
    for (const auto& e : rep.cgh.edges()) CHECK(oracle::cyclic_distance(10, e[0], e[1]) <= 2);
    for (std::size_t n : {9U, 11U, 14U}) CHECK(short_pairs_construction(n, 2, 5).edge_count == 4 * n);
    CHECK_FALSE(any_stack(rep.cgh, 3));

    auto r4 = short_pairs_construction(12, 4, 3);
    CHECK_FALSE(contains_stack(r4.cgh, 3));
    CHECK(r4.edge_count == 0);
    CHECK_FALSE(r4.note.empty());

    auto r4k5 = short_pairs_construction(12, 4, 5);
    CHECK(r4k5.edge_count > 0);
    CHECK_FALSE(any_stack(r4k5.cgh, 5));

    CHECK_THROWS_AS(short_pairs_construction(10, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(short_pairs_construction(4, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(short_pairs_construction(10, 3, 3), std::invalid_argument);
}

TEST_CASE("stack-free construction parts", "[constructions]") {
    for (std::size_t r : {2U, 4U})
        for (std::size_t n = r + 3; n <= 12; ++n) {
            auto rep = stack_free_construction(n, r, 3);
            CHECK(rep.extras.at("part_0") == static_cast<double>(binomial(n - 1, r - 1)));
            CHECK(static_cast<double>(rep.edge_count) >=
                  rep.extras.at("parts_total") - rep.extras.at("pairwise_overlap_total"));
            CHECK(static_cast<double>(rep.edge_count) <= rep.extras.at("parts_total"));
        }
}

TEST_CASE("stack-free construction matches the membership predicate", "[constructions]") {
    for (std::size_t r : {2U, 4U, 6U})
        for (std::size_t k = 1; k <= 4; ++k)
            for (std::size_t n = r + k; n <= 13; n += 2)
                for (bool cyclic : {true, false}) {
                    auto rep = stack_free_construction(n, r, k, cyclic ? PairReading::cyclic : PairReading::linear);
                    REQUIRE(rep.edge_count == oracle::stack_free_count(n, r, k, cyclic));
                    for (const auto& e : rep.cgh.edges()) REQUIRE(oracle::in_stack_free(n, r, k, e, cyclic));
                }
}

TEST_CASE("small stack-free instances avoid stacks", "[constructions]") {
    for (std::size_t n = 10; n <= 12; ++n) CHECK_FALSE(any_stack(stack_free_construction(n, 4, 2).cgh, 2));
    for (std::size_t n = 10; n <= 11; ++n) CHECK_FALSE(any_stack(stack_free_construction(n, 4, 3).cgh, 3));
    for (std::size_t n = 4; n <= 9; ++n) CHECK_FALSE(oracle::contains_stack(stack_free_construction(n, 2, 2).cgh, 2));
}

TEST_CASE("graph case with k = 3 holds a three-stack", "[constructions]") {
    std::vector<Vertex> seq{2, 1, 3, 0, 4, 5};
    for (std::size_t n = 6; n <= 9; ++n) {
        auto h = stack_free_construction(n, 2, 3).cgh;
        CHECK(is_stack_witness(h, seq));
        CHECK(oracle::contains_stack(h, 3));
    }
}

TEST_CASE("stack-free construction at twelve vertices holds a three-stack", "[constructions]") {
    // The middle edge 1 4 7 10 enters through its pair at distance k = 3.
    auto h = stack_free_construction(12, 4, 3).cgh;
    std::vector<Vertex> seq{0, 5, 6, 11, 1, 4, 7, 10, 2, 3, 8, 9};
    CHECK(h.contains({1, 4, 7, 10}));
    CHECK(is_stack_witness(h, seq));
    auto linear = stack_free_construction(12, 4, 3, PairReading::linear).cgh;
    CHECK(is_stack_witness(linear, seq));
}

TEST_CASE("stack-free degenerate cases", "[constructions]") {
    auto k1 = stack_free_construction(8, 4, 1);
    CHECK_FALSE(k1.claim_applies);
    CHECK(k1.edge_count == binomial(7, 3));
    CHECK(contains_stack(k1.cgh, 1));
    CHECK(stack_free_construction(8, 4, 3).claim_applies);
    CHECK_THROWS_AS(stack_free_construction(6, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(stack_free_construction(10, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(stack_free_construction(10, 4, 0), std::invalid_argument);
}

TEST_CASE("stack-free leading ratio grows with n", "[constructions]") {
    double prev = 0;
    for (std::size_t n : {16U, 24U, 32U}) {
        const double ratio = stack_free_construction(n, 4, 3).extras.at("leading_ratio");
        CHECK(ratio > prev);
        CHECK(ratio < 1.0);
        prev = ratio;
    }
}

TEST_CASE("clique union", "[constructions]") {
    auto rep = clique_union(6, 3);
    CHECK(rep.edge_count == 6);
    CHECK(rep.note.empty());
    CHECK(clique_union(5, 5).edge_count == 10);
    for (std::size_t k = 2; k <= 4; ++k)
        for (std::size_t n = k; n <= 12; ++n) {
            auto c = clique_union(n, k);
            CHECK_FALSE(contains_zigzag(c.cgh, k));
            CHECK_FALSE(contains_zigzag(reflect(c.cgh), k));
            if (n % k == 0) CHECK(2 * c.edge_count == (k - 1) * n);
            else CHECK_FALSE(c.note.empty());
        }
    CHECK_THROWS_AS(clique_union(6, 1), std::invalid_argument);
}

TEST_CASE("partitioned construction", "[constructions]") {
    auto rep = partitioned_construction(16, 4, 5);
    const auto& g = rep.cgh;
    CHECK(g.size() == 2 * 7 * binomial(7, 2));
    CHECK_FALSE(find_tight_path(g, 5).has_value());
    CHECK(find_tight_path(g, 4).has_value());

    // Each edge meets exactly one A_i = {8i}; that index names its class.
    auto cls = [](const Edge& e) {
        int found = -1, hits = 0;
        for (Vertex v : e)
            if (v % 8 == 0) {
                found = static_cast<int>(v / 8);
                ++hits;
            }
        REQUIRE(hits == 1);
        return found;
    };
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b) {
            const auto& e = g.edges()[a];
            const auto& f = g.edges()[b];
            if (cls(e) == cls(f)) continue;
            std::size_t common = 0;
            for (Vertex v : e) common += std::count(f.begin(), f.end(), v);
            REQUIRE(common <= 2);
        }
    CHECK(rep.predicted_leading_term == Rational(2 * 4 * 6, 64));
    CHECK(rep.extras.count("residual_n_over_r") == 1);

    CHECK_FALSE(partitioned_construction(8, 4, 1).claim_applies);
    CHECK_THROWS_AS(partitioned_construction(16, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(partitioned_construction(15, 4, 5), std::invalid_argument);
}

TEST_CASE("odd lift identities", "[constructions]") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto h = random_cgh(7, 3, 0.3, seed);
        for (std::size_t x = 1; x <= 3; ++x) {
            auto lifted = lift_odd(h, x);
            CHECK(lifted.r() == 4);
            CHECK(lifted.n() == 7 + x);
            CHECK(lifted.size() == x * h.size());
            CHECK(shadow(lifted).size() == x * shadow(h).size() + h.size());
        }
    }
    CHECK_THROWS_AS(lift_odd(complete_cgh(5, 2), 1), std::invalid_argument);
    CHECK_THROWS_AS(lift_odd(complete_cgh(5, 3), 0), std::invalid_argument);
}

TEST_CASE("stack witness round trip", "[constructions]") {
    for (std::size_t r : {2U, 4U, 6U})
        for (std::size_t k = 1; k <= 3; ++k) {
            auto seq = stack_witness_sequence(k * r, r, k);
            auto h = stack_witness(k * r, r, k);
            CHECK(h.size() == k);
            CHECK(is_stack_witness(h, seq));
            if (r * k <= 8) CHECK(oracle::contains_stack(h, k));
        }
    CHECK_THROWS_AS(stack_witness(5, 2, 3), std::invalid_argument);
}
