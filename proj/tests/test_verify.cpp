#include <catch_amalgamated.hpp>

#include <cmath>

#include "cgh/constructions.hpp"
#include "cgh/random.hpp"
#include "cgh/search.hpp"
#include "cgh/verify.hpp"
#include "oracles.hpp"

using namespace cgh;

TEST_CASE("end-count inequality", "[verify]") {
    auto h = random_cgh(9, 4, 0.3, 3);
    auto k1 = check_end_count_inequality(h, 1);
    CHECK(k1.holds);
    CHECK(k1.lhs == Rational(static_cast<std::int64_t>(4 * h.size())));
    CHECK(k1.rhs == k1.lhs);
    auto empty = check_end_count_inequality(Cgh(CyclicGround(6), 2), 3);
    CHECK(empty.holds);
    CHECK(empty.lhs == Rational(0));
    CHECK(empty.rhs == Rational(0));
    for (std::uint64_t i = 0; i < 60; ++i) {
        Rng rng(derive_seed(31, i));
        const std::size_t r = i % 2 ? 4 : 2;
        const std::size_t n = r + 2 + uniform_below(rng, 12 - r - 1);
        auto g = random_cgh(n, r, 0.2 + 0.6 * uniform01(rng), rng);
        for (std::size_t k = 1; k <= 4; ++k) REQUIRE(check_end_count_inequality(g, k).holds);
    }
    CHECK_THROWS_AS(check_end_count_inequality(complete_cgh(5, 3), 1), std::invalid_argument);
}

TEST_CASE("injections", "[verify]") {
    for (std::size_t k = 1; k <= 4; ++k) CHECK(check_injections(complete_cgh(5, 2), k).all_hold());
    auto single = check_injections(Cgh(CyclicGround(5), 2, {{1, 3}}), 1);
    CHECK(single.eq2.lhs == Rational(2));
    CHECK(single.eq2.rhs == Rational(2));
    CHECK(single.all_hold());
    CHECK(check_injections(Cgh(CyclicGround(5), 2), 2).all_hold());
    for (std::uint64_t i = 0; i < 40; ++i) {
        auto g = random_cgh(9, 4, 0.35, derive_seed(32, i));
        for (std::size_t k = 1; k <= 3; ++k) REQUIRE(check_injections(g, k).all_hold());
    }
    CHECK_THROWS_AS(check_injections(complete_cgh(5, 3), 1), std::invalid_argument);
}

TEST_CASE("coloring reduction", "[verify]") {
    auto h = random_cgh(8, 2, 0.5, 4);
    auto red = coloring_reduction(h, 9);
    CHECK(red.g == h);
    CHECK(red.coloring.s() == 1);
    auto h4 = random_cgh(10, 4, 0.4, 5);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto c = coloring_reduction(h4, seed);
        for (const auto& e : c.g.edges()) {
            CHECK(h4.contains_sorted(e));
            for (std::uint32_t i = 0; i < 2; ++i) CHECK(c.coloring.count_in(e, i) == 2);
        }
        CHECK(c.shadow_parts == shadow_class_counts(c.g, c.coloring));
    }
    CHECK(coloring_reduction(h4, 3).g == coloring_reduction(h4, 3).g);
}

TEST_CASE("expectations over random colorings", "[verify]") {
    CHECK(edge_survival_probability(2) == Rational(1));
    CHECK(edge_survival_probability(4) == Rational(3, 8));
    CHECK(edge_survival_probability(6) == Rational(720, 8 * 729));

    auto h2 = random_cgh(7, 2, 0.5, 2);
    auto e2 = expected_counts_exact(h2);
    CHECK(e2.edges == Rational(static_cast<std::int64_t>(h2.size())));

    std::vector<Edge> eight;
    for_each_subset(8, 4, [&](const Edge& e) {
        if (eight.size() < 8) eight.push_back(e);
    });
    auto e4 = expected_counts_exact(Cgh(CyclicGround(8), 4, eight));
    CHECK(e4.edges == Rational(3));
    REQUIRE(e4.edges_enumerated);
    CHECK(*e4.edges_enumerated == Rational(3));

    for (std::uint64_t i = 0; i < 10; ++i) {
        auto h = random_cgh(8 + i % 3, 4, 0.3, derive_seed(33, i));
        auto ex = expected_counts_exact(h);
        auto or_ = oracle::coloring_expectation(h);
        REQUIRE(ex.edges == or_.edges);
        REQUIRE(ex.shadow == or_.shadow);
        REQUIRE(ex.edges_enumerated);
        CHECK(*ex.edges_enumerated == ex.edges);
        CHECK(*ex.shadow_enumerated == ex.shadow);
        for (const auto& v : ex.shadow) CHECK(v <= ex.shadow_closed_form);
    }
    auto h6 = random_cgh(9, 6, 0.4, 6);
    auto e6 = expected_counts_exact(h6);
    CHECK(e6.edges == *e6.edges_enumerated);
    CHECK(e6.shadow == *e6.shadow_enumerated);
}

TEST_CASE("monte carlo matches exact expectations", "[verify]") {
    auto h = random_cgh(10, 4, 0.3, 7);
    auto ex = coloring_experiment(h, 20000, 11);
    CHECK(ex.within_3se);
    CHECK(ex.samples == 20000);
    CHECK(ex.observed_shadow.size() == 2);
    auto again = coloring_experiment(h, 20000, 11);
    CHECK(again.observed_g == ex.observed_g);
    CHECK_THROWS_AS(coloring_experiment(h, 1, 1), std::invalid_argument);
}

TEST_CASE("good-path inequalities", "[verify]") {
    for (std::uint64_t i = 0; i < 30; ++i) {
        Rng rng(derive_seed(34, i));
        const std::size_t n = 8 + uniform_below(rng, 5);
        auto h = random_cgh(n, 4, 0.4, rng);
        auto red = coloring_reduction(h, rng);
        CHECK(enumerate_good_ends(red.g, red.coloring, 1).size() == 4 * red.g.size());
        for (std::size_t k = 1; k <= 3; ++k)
            for (const auto& rep : check_good_path_inequalities(red.g, red.coloring, k)) {
                INFO(rep.name << " k=" << k << " seed index " << i);
                REQUIRE(rep.holds);
                if (k == 1 && rep.name == "good-ends") CHECK(rep.lhs == rep.rhs);
            }
    }
    auto empty = Cgh(CyclicGround(8), 4);
    Rng rng(1);
    for (const auto& rep : check_good_path_inequalities(empty, Coloring::random(8, 2, rng), 2)) CHECK(rep.holds);
    CHECK_THROWS_AS(check_good_path_inequalities(complete_cgh(6, 4), Coloring({0, 0, 0, 0, 1, 1}, 2), 1),
                    std::invalid_argument);
}

TEST_CASE("end counts of colored hosts compose in expectation", "[verify]") {
    // Mean |S_k(G)| against 2^s E|G| - 2^{s-1} sum_{i<=k-2} E|d_{h(i)} G|.
    for (std::uint64_t i = 0; i < 4; ++i) {
        auto h = random_cgh(10, 4, 0.35, derive_seed(35, i));
        const auto ex = expected_counts_exact(h, 0);
        for (std::size_t k = 1; k <= 3; ++k) {
            Rng rng(derive_seed(36, i * 8 + k));
            const std::size_t samples = 400;
            double sum = 0, sq = 0;
            for (std::size_t t = 0; t < samples; ++t) {
                auto red = coloring_reduction(h, rng);
                const auto sk = static_cast<double>(enumerate_good_ends(red.g, red.coloring, k).size());
                sum += sk;
                sq += sk * sk;
            }
            const double mean = sum / samples;
            const double se = std::sqrt(std::max(0.0, (sq - samples * mean * mean) / (samples - 1)) / samples);
            Rational rhs = Rational(4) * ex.edges;
            for (std::size_t j = 0; j + 2 <= k; ++j) rhs -= Rational(2) * ex.shadow[good_class(j, 2)];
            CHECK(mean + 3 * se >= to_double(rhs));
        }
    }
}

TEST_CASE("phi and ell", "[verify]") {
    CHECK(ell_for_k(4, 3) == 6);
    CHECK(phi(6, 3) == 3);
    CHECK(phi(1, 3) == 1);
    for (std::size_t r = 3; r <= 15; r += 2) {
        CHECK(ell_for_k(1, r) == 2);
        CHECK(phi(2, r) == 2);
        for (std::size_t k = 1; k <= 100; ++k) {
            const auto l = ell_for_k(k, r);
            REQUIRE(l + 1 - phi(l, r) == k);
            REQUIRE(phi(l, r) == (l + r + r) / (r + 1));
            REQUIRE(phi(l, r) * (r + 1) >= l + r);
            REQUIRE((phi(l, r) - 1) * (r + 1) < l + r);
        }
    }
    CHECK_THROWS_AS(phi(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(phi(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(ell_for_k(0, 3), std::invalid_argument);
}

TEST_CASE("bound values", "[verify]") {
    auto b = bound_values(5, 3, 4);
    CHECK(b.thm2 == Rational(25));
    CHECK(b.conj1 == Rational(10));
    CHECK(b.trivial == Rational(30));
    CHECK_FALSE(b.thm4);
    for (std::size_t n = 2; n <= 12; ++n)
        for (std::size_t k = 1; k <= 6; ++k) {
            auto g = bound_values(n, 2, k);
            CHECK(g.thm2 == Rational(static_cast<std::int64_t>((k - 1) * n), 2));
            REQUIRE(g.thm3);
            CHECK(*g.thm3 == g.thm2);
        }
    for (std::size_t k = 1; k <= 40; ++k) {
        auto o = bound_values(20, 3, k);
        REQUIRE(o.odd_improvement_coefficient);
        CHECK(*o.odd_improvement_coefficient <= (3 + std::sqrt(8.0)) / 9 * static_cast<double>(k) + 1e-9);
        REQUIRE(o.odd_improvement_upper);
        CHECK(to_double(*o.odd_improvement_upper) >= *o.odd_improvement);
    }
    auto e = bound_values(10, 4, 3);
    REQUIRE(e.thm4);
    CHECK(*e.thm4 == Rational(2 * 3, 4) * Rational(120));
    CHECK(e.link == Rational(9, 8) * Rational(120));
    CHECK(e.link_applies);
    CHECK_FALSE(bound_values(10, 2, 4).link_applies);
    CHECK_THROWS_AS(bound_values(3, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(bound_values(5, 2, 0), std::invalid_argument);
}

TEST_CASE("bound ordering", "[verify]") {
    for (std::size_t r = 2; r <= 7; ++r)
        for (std::size_t n = r; n <= 14; ++n)
            for (std::size_t k = 2; k <= 12; ++k)
                for (const auto& rep : check_bound_ordering(n, r, k)) {
                    INFO(rep.name << " n=" << n << " r=" << r << " k=" << k);
                    REQUIRE(rep.holds);
                }
}

TEST_CASE("zigzag-free graphs have at most kn edges", "[verify]") {
    for (std::size_t n = 3; n <= 6; ++n) {
        const std::size_t pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            auto g = oracle::graph_from_mask(n, mask);
            for (std::size_t k = 1; k <= 2; ++k)
                if (g.size() > k * n) REQUIRE(contains_zigzag(g, 2 * k + 1));
        }
    }
    for (std::uint64_t i = 0; i < 3000; ++i) {
        auto g = random_cgh(7, 2, 0.35 + 0.3 * static_cast<double>(i % 3), derive_seed(37, i));
        for (std::size_t k = 1; k <= 2; ++k)
            if (g.size() > k * 7) REQUIRE(contains_zigzag(g, 2 * k + 1));
    }
}

TEST_CASE("odd reduction", "[verify]") {
    auto witness = max_edges_avoiding(5, 3, {PatternKind::tight_path, 4, false}).witness;
    auto rep = check_odd_reduction(witness, 4);
    CHECK(rep.ell == 6);
    CHECK(rep.bound.lhs == Rational(10));
    CHECK(rep.bound.rhs == Rational(25));
    CHECK(rep.bound.holds);
    CHECK(rep.lifted.holds);
    CHECK(rep.detector_run);
    CHECK(rep.lifted_path_free);
    CHECK(rep.x_count > (rep.ell - 1) * witness.size() / 2);

    auto empty = check_odd_reduction(Cgh(CyclicGround(6), 3), 2);
    CHECK(empty.bound.holds);
    CHECK(empty.bound.lhs == Rational(0));

    for (std::uint64_t i = 0; i < 20; ++i) {
        auto h = random_cgh(6, 3, 0.25, derive_seed(38, i));
        for (std::size_t k = 2; k <= 4; ++k) {
            if (contains_tight_path(h, k)) continue;
            auto r = check_odd_reduction(h, k);
            CHECK(r.bound.holds);
            CHECK(r.lifted_path_free);
        }
    }
    CHECK_THROWS_AS(check_odd_reduction(complete_cgh(5, 3), 2), std::invalid_argument);
    CHECK_THROWS_AS(check_odd_reduction(complete_cgh(5, 2), 2), std::invalid_argument);
}

TEST_CASE("link recursion", "[verify]") {
    auto empty = check_link_recursion(Cgh(CyclicGround(6), 4), 3);
    CHECK(empty.bound.holds);
    CHECK(empty.averaging.holds);
    for (std::size_t n = 4; n <= 6; ++n)
        for (std::size_t k = 1; k <= 5; ++k) {
            auto res = max_edges_avoiding(n, 4, {PatternKind::tight_path, k, false});
            auto rep = check_link_recursion(res.witness, k);
            INFO("n=" << n << " k=" << k);
            CHECK(rep.bound.holds);
            CHECK(rep.averaging.holds);
            CHECK(rep.link_path_free);
        }
    for (std::uint64_t i = 0; i < 20; ++i) {
        auto h = random_cgh(8, 3, 0.15, derive_seed(39, i));
        if (!contains_tight_path(h, 3)) CHECK(check_link_recursion(h, 3).averaging.holds);
    }
    CHECK_THROWS_AS(check_link_recursion(complete_cgh(6, 2), 4), std::invalid_argument);
    CHECK_THROWS_AS(check_link_recursion(complete_cgh(6, 3), 2), std::invalid_argument);
}

TEST_CASE("extremal results respect the bounds", "[verify]") {
    TableSpec spec{{4, 5, 6}, {2, 3, 4}, {1, 2, 3, 4}, {PatternKind::tight_path, PatternKind::zigzag}, false};
    for (const auto& row : extremal_table(spec)) {
        REQUIRE(row.exact);
        for (const auto& rep : check_extremal_bounds(row)) {
            INFO(rep.name << " n=" << row.n << " r=" << row.r << " k=" << row.pattern.k);
            CHECK(rep.holds);
        }
    }
}
