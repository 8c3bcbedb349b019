#include <doctest.h>
#include <random>

#include "weave/errors.hpp"
#include "weave/flagkit.hpp"

using namespace weave;

namespace {

QVec v2(long a, long b) { return {mpq_class(a), mpq_class(b)}; }
QVec v3(long a, long b, long c) { return {mpq_class(a), mpq_class(b), mpq_class(c)}; }

QVec scaled(QVec v, const mpq_class& s) {
    for (auto& x : v) x *= s;
    return v;
}

QVec rand_vec(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> d(-9, 9);
    QVec v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

}  // namespace

TEST_CASE("cross ratio") {
    CHECK(cross_ratio(v2(1, 0), v2(0, 1), v2(1, 1), v2(1, 2)) == mpq_class(1, 2));
    // projective in each argument
    CHECK(cross_ratio(scaled(v2(1, 0), 3), v2(0, 1), scaled(v2(1, 1), mpq_class(-2, 5)), v2(1, 2)) == mpq_class(1, 2));
    // cyclic shift inverts
    CHECK(cross_ratio(v2(0, 1), v2(1, 1), v2(1, 2), v2(1, 0)) == 2);
    CHECK_THROWS_AS(cross_ratio(v2(1, 0), v2(2, 0), v2(1, 1), v2(1, 2)), ZeroWedge);
}

TEST_CASE("triple ratio") {
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 50) {
        QVec a = rand_vec(rng, 3), b = rand_vec(rng, 3), c = rand_vec(rng, 3);
        QVec A = rand_vec(rng, 3), B = rand_vec(rng, 3), C = rand_vec(rng, 3);
        mpq_class up, lo, sc;
        try {
            up = triple_ratio(a, b, c, A, B, C, YSense::Upper);
            lo = triple_ratio(a, b, c, A, B, C, YSense::Lower);
            sc = triple_ratio(scaled(a, 2), scaled(b, -3), c, scaled(A, 5), B, scaled(C, mpq_class(1, 7)),
                              YSense::Upper);
        } catch (const ZeroPairing&) {
            continue;
        }
        ++done;
        CHECK(up * lo == 1);
        CHECK(sc == up);
    }
}

TEST_CASE("face flags on linear(1)") {
    auto w = build_linear(1);
    auto bf = generic_boundary_flags(w.graph, 11);
    CHECK(bf.arcs.size() == w.graph.boundary().size());
    auto fa = solve_face_flags(w.graph, bf);
    CHECK(fa.faces.faces.size() == 4);
    CHECK_NOTHROW(check_flag_conditions(w.graph, fa));

    // two neighbouring arcs separated by an edge cannot carry the same line
    BoundaryFlags bad = bf;
    for (int j = 0; j < static_cast<int>(bad.arcs.size()); ++j)
        bad.arcs[j] = Flag::from_line(v2(1, j == 0 ? 1 : j + 2));
    bad.arcs[1] = bad.arcs[0];
    CHECK_THROWS_AS(solve_face_flags(w.graph, bad), ConstraintViolated);
}

TEST_CASE("flags are deterministic in the seed") {
    auto g = build_tripod(2, 2, 2).graph;
    auto a = generic_boundary_flags(g, 5), b = generic_boundary_flags(g, 5);
    CHECK(to_json(a) == to_json(b));
    CHECK(to_json(a) != to_json(generic_boundary_flags(g, 6)));
}

TEST_CASE("monodromies are GL-invariant") {
    std::mt19937_64 rng(3);
    for (const auto& w : {build_linear(3), build_tripod(1, 1, 1), build_tripod(2, 2, 2)}) {
        auto bf = generic_boundary_flags(w.graph, rng());
        QMatrix m;
        for (int i = 0; i < bf.N; ++i) {
            QVec row(bf.N);
            for (int j = 0; j < bf.N; ++j) row[j] = (i == j ? 2 : 0) + (j > i ? i + j + 1 : 0);
            m.push_back(row);
        }
        auto fa = solve_face_flags(w.graph, bf);
        auto fb = solve_face_flags(w.graph, transform(bf, m));
        CHECK_NOTHROW(check_flag_conditions(w.graph, fb));
        for (const auto& c : w.cycles) CHECK(monodromy(w.graph, fa, c) == monodromy(w.graph, fb, c));
    }
}

TEST_CASE("equivariance under Legendrian mutation") {
    auto w = build_linear(1);
    auto r = check_equivariance(w, generic_boundary_flags(w.graph, 2), 0);
    CHECK(r.ok);
    REQUIRE(r.before.y.size() == 1);
    CHECK(r.after.y[0] == 1 / r.before.y[0]);

    for (const auto& x : {build_linear(3), build_tripod(1, 1, 1), build_tripod(2, 2, 2)})
        for (int k = 0; k < static_cast<int>(x.cycles.size()); ++k) {
            auto rr = check_equivariance(x, generic_boundary_flags(x.graph, 100 + k), k);
            CHECK(rr.ok);
            CHECK(rr.after.y == rr.expected.y);
        }
}

TEST_CASE("extracted seed uses the intersection quiver") {
    auto w = build_tripod(2, 2, 2);
    auto fa = solve_face_flags(w.graph, generic_boundary_flags(w.graph, 9));
    auto y = extract_seed(w, fa);
    CHECK(y.matrix == quiver_of(w.graph, w.cycles).exchange_matrix());
    for (const auto& v : y.y) CHECK(v != 0);
}

TEST_CASE("boundary flag JSON round trip") {
    for (const auto& g : {build_linear(2).graph, build_tripod(1, 2, 2).graph}) {
        auto bf = generic_boundary_flags(g, 4);
        auto r = boundary_flags_from_json(to_json(bf));
        REQUIRE(r.arcs.size() == bf.arcs.size());
        CHECK(r.N == bf.N);
        for (std::size_t j = 0; j < bf.arcs.size(); ++j)
            for (int i = 1; i < bf.N; ++i) CHECK(same_subspace(r.arcs[j], bf.arcs[j], i));
    }
}
