#include <doctest.h>

#include <functional>
#include <set>

#include "weave/errors.hpp"
#include "weave/rootdata.hpp"

using namespace weave;

namespace {

std::vector<DynkinType> all_types(int max_rank) {
    std::vector<DynkinType> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({Family::C, n});
    for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n});
    for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Family::E, n});
    out.push_back({Family::F, 4});
    out.push_back({Family::G, 2});
    return out;
}

// Coxeter numbers as tabulated.
int table_h(const DynkinType& t) {
    switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C: return 2 * t.rank;
    case Family::D: return 2 * t.rank - 2;
    case Family::E: return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
    }
    return 0;
}

// Simply-laced oracle: positive roots are the nonnegative vectors with
// q(v) = v^T C v / 2 = 1, searched with coordinates up to the bound.
std::set<RootVector> norm_roots(const IntMatrix& c, int bound) {
    const int n = static_cast<int>(c.size());
    std::set<RootVector> out;
    RootVector v(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            long q = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) q += static_cast<long>(v[a]) * c[a][b] * v[b];
            if (q == 2) out.insert(v);
            return;
        }
        for (int x = 0; x <= bound; ++x) {
            v[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

TEST_CASE("cartan matrices") {
    CHECK(cartan_matrix(parse_dynkin("A2")) == IntMatrix{{2, -1}, {-1, 2}});
    CHECK(cartan_matrix(parse_dynkin("A1")) == IntMatrix{{2}});
    CHECK(cartan_matrix(parse_dynkin("G2")) == IntMatrix{{2, -1}, {-3, 2}});
    for (const auto& t : all_types(8)) {
        auto c = cartan_matrix(t);
        for (int i = 0; i < t.rank; ++i) {
            CHECK(c[i][i] == 2);
            for (int j = 0; j < t.rank; ++j)
                if (i != j) CHECK(c[i][j] <= 0);
        }
        CHECK(symmetrizer(c).has_value());
    }
}

TEST_CASE("rank constraints") {
    CHECK_THROWS_AS(validate({Family::B, 1}), InvalidArgument);
    CHECK_THROWS_AS(validate({Family::C, 2}), InvalidArgument);
    CHECK_THROWS_AS(validate({Family::D, 3}), InvalidArgument);
    CHECK_THROWS_AS(validate({Family::E, 9}), InvalidArgument);
    CHECK_THROWS_AS(validate({Family::F, 5}), InvalidArgument);
    CHECK_THROWS_AS(parse_dynkin("X3"), InvalidArgument);
    CHECK(parse_dynkin("e6") == DynkinType{Family::E, 6});
}

TEST_CASE("coxeter numbers") {
    CHECK(coxeter_number(parse_dynkin("A3")) == 4);
    CHECK(coxeter_number(parse_dynkin("D4")) == 6);
    CHECK(coxeter_number(parse_dynkin("G2")) == 6);
    for (const auto& t : all_types(8)) CHECK(coxeter_number(t) == table_h(t));
}

TEST_CASE("positive roots") {
    CHECK(positive_roots(parse_dynkin("A1")) == std::vector<RootVector>{{1}});
    auto a2 = positive_roots(parse_dynkin("A2"));
    CHECK(std::set<RootVector>(a2.begin(), a2.end()) == std::set<RootVector>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(positive_roots(parse_dynkin("D4")).size() == 12);
    for (const auto& t : all_types(8)) {
        CAPTURE(to_string(t));
        auto roots = positive_roots(t);
        CHECK(static_cast<int>(roots.size()) == t.rank * table_h(t) / 2);
        for (const auto& r : roots)
            for (int x : r) CHECK(x >= 0);
        CHECK(almost_positive_roots(t).size() == roots.size() + t.rank);
    }
}

TEST_CASE("simply-laced roots agree with the norm oracle") {
    const std::vector<std::pair<const char*, int>> cases = {
        {"A4", 1}, {"D5", 2}, {"E6", 3}, {"E7", 4}, {"E8", 6}};
    for (auto [name, bound] : cases) {
        CAPTURE(name);
        auto t = parse_dynkin(name);
        auto roots = positive_roots(t);
        CHECK(std::set<RootVector>(roots.begin(), roots.end()) == norm_roots(cartan_matrix(t), bound));
    }
}

TEST_CASE("roots are closed under simple reflections") {
    for (const auto& t : all_types(6)) {
        CAPTURE(to_string(t));
        auto c = cartan_matrix(t);
        auto roots = positive_roots(t);
        std::set<RootVector> all(roots.begin(), roots.end());
        for (const auto& r : roots) {
            RootVector neg = r;
            for (auto& x : neg) x = -x;
            all.insert(neg);
        }
        for (const auto& r : all)
            for (int i = 0; i < t.rank; ++i) {
                // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, computed directly
                int pairing = 0;
                for (int j = 0; j < t.rank; ++j) pairing += r[j] * c[j][i];
                RootVector s = r;
                s[i] -= pairing;
                CHECK(all.count(s) == 1);
                CHECK(simple_reflection(c, r, i) == s);
            }
    }
}

TEST_CASE("finite cartan classification") {
    auto a2 = classify_finite_cartan({{2, -1}, {-1, 2}});
    REQUIRE(a2);
    CHECK(*a2 == std::vector<DynkinType>{{Family::A, 2}});
    auto g2 = classify_finite_cartan({{2, -1}, {-3, 2}});
    REQUIRE(g2);
    CHECK(*g2 == std::vector<DynkinType>{{Family::G, 2}});
    CHECK_FALSE(classify_finite_cartan({{2, -2}, {-2, 2}}));
    CHECK_THROWS_AS(classify_finite_cartan({{2, 1}, {1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(classify_finite_cartan({{3, -1}, {-1, 2}}), InvalidArgument);
    for (const auto& t : all_types(8)) {
        CAPTURE(to_string(t));
        auto got = classify_finite_cartan(cartan_matrix(t));
        REQUIRE(got);
        CHECK(*got == std::vector<DynkinType>{t});
    }
    // A2 + A1 block diagonal
    auto two = classify_finite_cartan({{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}});
    REQUIRE(two);
    CHECK(two->size() == 2);
}
