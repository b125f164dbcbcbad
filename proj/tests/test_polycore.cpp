#include <doctest.h>

#include "monodec/errors.hpp"
#include "monodec/unipoly.hpp"
#include "support.hpp"

using namespace monodec;

namespace {

UniPoly P(std::vector<std::int64_t> c)
{
    std::vector<Rat> r;
    for (auto v : c)
        r.emplace_back(v);
    return UniPoly(std::move(r));
}

} // namespace

TEST_CASE("rationals stay normalized")
{
    const Rat r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rat(0, 7).to_fraction_string() == "0/1");
    CHECK(Rat(3).to_fraction_string() == "3/1");
    CHECK(Rat::parse("-10/4") == Rat(-5, 2));
    CHECK_THROWS_AS(Rat(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rat(1) / Rat(0), DivisionByZero);
    CHECK_THROWS_AS(Rat(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Rat::parse("1/-2"), ValidationError);
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
}

TEST_CASE("poly_add")
{
    CHECK(poly_add(P({0, 1, 1}), P({0, 0, -1})) == P({0, 1}));
    CHECK(poly_add(UniPoly(), P({0, 1, 3})) == P({0, 1, 3}));
    CHECK(poly_add(P({1, 2}), P({1, 2})) == P({2, 4}));
    CHECK(poly_add(P({1, 2}), -P({1, 2})).is_zero());
}

TEST_CASE("poly_mul")
{
    CHECK(poly_mul(P({1, 2, 2}), P({1, 2})) == P({1, 4, 6, 4}));
    CHECK(poly_mul(P({1, 2, 2}), UniPoly()).is_zero());
    CHECK(poly_mul(P({1, 2, 2}), P({1})) == P({1, 2, 2}));
}

TEST_CASE("poly_compose")
{
    CHECK(poly_compose(P({0, 0, 1}), P({0, 1, 1})) == P({0, 0, 1, 2, 1}));
    CHECK(poly_compose(P({0, 1}), P({3, 1, 4, 1})) == P({3, 1, 4, 1}));
    CHECK(poly_compose(P({0, 1, 1}), P({0, 1, 1})) == P({0, 1, 2, 2, 1}));
}

TEST_CASE("derivative and integral")
{
    CHECK(derivative(P({0, 1, 1})) == P({1, 2}));
    CHECK(derivative(P({7})).is_zero());
    CHECK(derivative(P({0, 1, 2, 2, 1})) == P({1, 4, 6, 4}));
    CHECK(integral(P({1, 2})) == P({0, 1, 1}));
    CHECK(integral(UniPoly()).is_zero());
    CHECK(integral(P({1, 4, 6, 4})) == P({0, 1, 2, 2, 1}));
    CHECK(integral(P({0, 1})) == UniPoly({Rat(0), Rat(0), Rat(1, 2)}));
}

TEST_CASE("leading_and_preleading")
{
    const auto [lead, pre] = leading_and_preleading(P({0, 1, 1, 1, 3, 3, 1}));
    CHECK(lead == Term{6, Rat(1)});
    CHECK(pre == Term{5, Rat(3)});

    const auto [l2, p2] = leading_and_preleading(UniPoly({Rat(0), Rat(1), Rat(-2, 7)}));
    CHECK(l2 == Term{2, Rat(-2, 7)});
    CHECK(p2 == Term{1, Rat(1)});

    CHECK_THROWS_WITH_AS(leading_and_preleading(P({0, 0, 0, 0, 0, 1})), "no pre-leading term", ValidationError);
}

TEST_CASE("zero polynomial has no degree")
{
    CHECK_FALSE(UniPoly().degree().has_value());
    CHECK(UniPoly(std::vector<Rat>{Rat(0), Rat(0)}).is_zero());
    CHECK(P({5}).degree() == 0U);
}

TEST_CASE("ring axioms and calculus identities on random samples")
{
    testing::Random rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const UniPoly f = rng.poly(6);
        const UniPoly g = rng.poly(6);
        const UniPoly h = rng.poly(6);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);
        CHECK(derivative(integral(f)) == f);
        const UniPoly q = f - UniPoly::constant(f.coeff(0));
        CHECK(integral(derivative(q)) == q);
        const UniPoly fg = f * g;
        for (const auto& c : fg.coeffs())
            CHECK(gcd(c.numerator(), c.denominator()) == 1);
    }
}

TEST_CASE("composition is associative and multiplies degrees")
{
    testing::Random rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const UniPoly f = rng.poly(4);
        const UniPoly g = rng.poly(3);
        const UniPoly h = rng.poly(3);
        CHECK(poly_compose(f, poly_compose(g, h)) == poly_compose(poly_compose(f, g), h));
        if (!f.is_constant() && !g.is_constant())
            CHECK(*poly_compose(f, g).degree() == *f.degree() * *g.degree());
    }
}
