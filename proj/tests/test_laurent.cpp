#include <doctest.h>

#include <random>

#include <gmpxx.h>

#include "weave/laurent.hpp"

using namespace weave;

namespace {

// Oracle: exact evaluation at a rational point.
mpq_class eval(const LaurentPoly& p, const std::vector<mpq_class>& x) {
    mpq_class s = 0;
    for (std::size_t t = 0; t < p.size(); ++t) {
        mpq_class term = static_cast<long>(p.coef(t));
        for (int i = 0; i < p.nvars(); ++i) {
            int e = p.exps(t)[i];
            for (int k = 0; k < std::abs(e); ++k) {
                if (e > 0) term *= x[i];
                else term /= x[i];
            }
        }
        s += term;
    }
    return s;
}

LaurentPoly random_poly(std::mt19937_64& rng, int m, int terms) {
    LaurentPoly p(m);
    std::vector<std::int32_t> e(m);
    for (int t = 0; t < terms; ++t) {
        for (auto& x : e) x = static_cast<int>(rng() % 5) - 2;
        p.push_term(e.data(), static_cast<std::int64_t>(rng() % 7) - 3);
    }
    p.normalize();
    return p;
}

}  // namespace

TEST_CASE("canonical form") {
    LaurentPoly p(2);
    std::int32_t a[] = {1, 0}, b[] = {0, 1};
    p.push_term(b, 1);
    p.push_term(a, 2);
    p.push_term(b, -1);
    p.normalize();
    CHECK(p.size() == 1);
    CHECK(p == LaurentPoly::monomial(2, {1, 0}, 2));
    CHECK((p - p).is_zero());
}

TEST_CASE("arithmetic agrees with evaluation") {
    std::mt19937_64 rng(7);
    std::vector<mpq_class> x = {mpq_class(3, 2), mpq_class(-5, 7), mpq_class(11, 3)};
    for (int trial = 0; trial < 200; ++trial) {
        auto p = random_poly(rng, 3, 4), q = random_poly(rng, 3, 3);
        CHECK(eval(p + q, x) == eval(p, x) + eval(q, x));
        CHECK(eval(p - q, x) == eval(p, x) - eval(q, x));
        CHECK(eval(p * q, x) == eval(p, x) * eval(q, x));
        CHECK(eval(p.pow(2), x) == eval(p, x) * eval(p, x));
        if (!q.is_zero()) {
            auto d = (p * q).divide_exact(q);
            REQUIRE(d);
            CHECK(*d == p);
        }
    }
}

TEST_CASE("division failure is reported") {
    auto one = LaurentPoly::constant(2, 1);
    auto x1 = LaurentPoly::variable(2, 0), x2 = LaurentPoly::variable(2, 1);
    CHECK_FALSE((one + x1).divide_exact(one + x2));
    // monomials are units
    auto q = (one + x2).divide_exact(x1);
    REQUIRE(q);
    CHECK(q->min_exponent(0) == -1);
}

TEST_CASE("serialization round trip") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_poly(rng, 4, 6);
        CHECK(LaurentPoly::deserialize(4, p.serialize()) == p);
    }
}

TEST_CASE("modular evaluation") {
    std::mt19937_64 rng(5);
    std::vector<std::uint64_t> pt = {12345, 678910, 1112131415};
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_poly(rng, 3, 4), q = random_poly(rng, 3, 4);
        CHECK((p * q).eval_mod(pt) == modp::mul(p.eval_mod(pt), q.eval_mod(pt)));
        CHECK((p + q).eval_mod(pt) == modp::add(p.eval_mod(pt), q.eval_mod(pt)));
    }
    CHECK(modp::mul(modp::inv(987654321), 987654321) == 1);
}
