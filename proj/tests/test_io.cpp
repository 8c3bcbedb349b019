#include <doctest.h>

#include "weave/errors.hpp"
#include "weave/io.hpp"

using namespace weave;

TEST_CASE("seed JSON round trip") {
    auto s = initial_seed(dynkin_matrix(parse_dynkin("D4")));
    for (int k : {0, 1, 3, 1, 2}) s = mutate_seed(s, k);
    auto j = to_json(s);
    CHECK(seed_from_json(j) == s);
    CHECK(to_json(seed_from_json(j)) == j);
}

TEST_CASE("quiver and matrix JSON round trip") {
    auto q = Quiver::from_matrix(tripod_matrix(2, 2, 3));
    CHECK(quiver_from_json(to_json(q)) == q);
    auto b = ExchangeMatrix::from_rows({{0, 1, 2}, {-1, 0, -1}}, 2);
    CHECK(matrix_from_json(to_json(b)) == b);
    auto bad = to_json(b);
    bad["m"] = 5;
    CHECK_THROWS_AS(matrix_from_json(bad), InvalidArgument);
}

TEST_CASE("y-seed and action JSON round trip") {
    YSeedNumeric y{{mpq_class(2), mpq_class(-3, 7)}, dynkin_matrix(parse_dynkin("A2"))};
    auto r = yseed_from_json(to_json(y));
    CHECK(r.y == y.y);
    CHECK(r.matrix == y.matrix);

    VertexAction a({2, 1, 3, 0}, {{1}, {0, 2, 3}});
    auto ra = action_from_json(to_json(a));
    CHECK(ra.perm == a.perm);
    CHECK(ra.orbits == a.orbits);
    CHECK(ra.order == 3);
}

TEST_CASE("dynkin and laurent JSON") {
    for (const char* t : {"A5", "D4", "E8", "G2"}) CHECK(dynkin_from_json(to_json(parse_dynkin(t))) == parse_dynkin(t));
    auto s = initial_seed(dynkin_matrix(parse_dynkin("A3")));
    auto v = mutate_seed(mutate_seed(s, 0), 1).vars[1];
    CHECK(laurent_from_json(to_json(v), 3) == v);
    CHECK_THROWS_AS(laurent_from_json(to_json(v), 2), InvalidArgument);
}

TEST_CASE("dot output") {
    auto q = Quiver::from_matrix(linear_matrix(3));
    auto d = to_dot(q);
    CHECK(d.find("digraph") == 0);
    CHECK(d.find("v1 -> v2") != std::string::npos);
}
