#include <catch_amalgamated.hpp>

#include "cgh/core.hpp"
#include "cgh/io.hpp"
#include "cgh/random.hpp"

using namespace cgh;

namespace {

ParseError parse_failure(const std::string& text) {
    try {
        parse_cgh(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for:\n" << text);
    return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("reads the text format", "[io]") {
    auto h = parse_cgh("5 3 2\n2 1 0\n# comment\n\n4 3 2\n");
    CHECK(h.n() == 5);
    CHECK(h.r() == 3);
    CHECK(h.edges() == std::vector<Edge>{{0, 1, 2}, {2, 3, 4}});
}

TEST_CASE("writes canonically", "[io]") {
    Cgh h(CyclicGround(6), 2, {{4, 5}, {1, 0}, {3, 1}});
    CHECK(to_string(h) == "6 2 3\n0 1\n1 3\n4 5\n");
    CHECK(parse_cgh(to_string(h)) == h);
}

TEST_CASE("round trip of random hypergraphs", "[io]") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto h = random_cgh(9, 3, 0.3, seed);
        CHECK(parse_cgh(to_string(h)) == h);
    }
}

TEST_CASE("diagnostics carry line and column", "[io]") {
    auto e = parse_failure("4 2 2\n0 1\n0 7\n");
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);

    e = parse_failure("4 2 1\n0 x\n");
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);

    e = parse_failure("4 2 2\n0 1\n1 0\n");
    CHECK(e.line() == 3);

    e = parse_failure("4 2 1\n0 1 2\n");
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);

    e = parse_failure("4 2 3\n0 1\n");
    CHECK(e.line() == 3);

    e = parse_failure("4 2\n");
    CHECK(e.line() == 1);

    e = parse_failure("4 2 1\n2 2\n");
    CHECK(e.column() == 3);

    CHECK_THROWS_AS(parse_cgh(""), ParseError);
    CHECK_THROWS_AS(parse_cgh("0 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_cgh("3 2 1\n0 1\n1 2\n"), ParseError);
}
