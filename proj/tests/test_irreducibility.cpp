#include <doctest.h>

#include "monodec/errors.hpp"
#include "monodec/irreducibility.hpp"
#include "monodec/polytext.hpp"
#include "support.hpp"

using namespace monodec;

namespace {

PPoly Pp(const char* text)
{
    return PPoly::from_poly(parse_poly(text));
}

} // namespace

TEST_CASE("PPoly validation and lift")
{
    CHECK_THROWS_AS(Pp("2 + x"), ValidationError);
    CHECK_THROWS_AS(Pp("1"), ValidationError);
    CHECK(lift_to_mono(Pp("1 + 5x^4")) == UnitaryMono::from_poly(parse_poly("x + x^5")));
    CHECK(lift_to_mono(Pp("1 + 4x + 6x^2 + 4x^3")) == UnitaryMono::from_poly(parse_poly("x + 2x^2 + 2x^3 + x^4")));
    CHECK(lift_to_mono(Pp("1 + x")).poly() == parse_poly("x + 1/2*x^2"));
}

TEST_CASE("reducibility witnesses")
{
    const auto w = reducibility_witness(Pp("1 + 4x + 6x^2 + 4x^3"));
    REQUIRE(w.size() == 1);
    CHECK(w[0].u == parse_poly("1 + 2x + 2x^2"));
    CHECK(w[0].v == parse_poly("1 + 2x"));
    CHECK(w[0].u * w[0].v == parse_poly("1 + 4x + 6x^2 + 4x^3"));

    CHECK(reducibility_witness(Pp("1 + 5x^4")).empty());

    // derivative of (x + x^2)^{o3}: two two-factor splits
    const auto g = UnitaryMono::from_poly(parse_poly("x + x^2"));
    const auto p = PPoly::from_poly(derivative(mono_product(mono_product(g, g), g).poly()));
    const auto w3 = reducibility_witness(p);
    CHECK(w3.size() == 2);
    for (const auto& wi : w3)
        CHECK(wi.u * wi.v == p.poly());
}

TEST_CASE("irreducibility_report")
{
    const auto prime = irreducibility_report(Pp("1 + 5x^4"));
    CHECK(prime.shapes.empty());
    CHECK(prime.verdict == Verdict::necessary_conditions_hold);
    CHECK(std::string(to_string(prime.verdict)) == "necessary conditions for irreducibility hold");

    const auto sq = irreducibility_report(Pp("1 + 4x + 6x^2 + 4x^3"));
    REQUIRE(sq.shapes.size() == 1);
    CHECK(sq.shapes[0].n == 1);
    CHECK(sq.shapes[0].m == 2);
    CHECK(sq.shapes[0].decomposable);
    CHECK(sq.verdict == Verdict::reducible);

    // lift x + 2x^2 + 3x^3 + x^4 is not a square
    const auto near = irreducibility_report(Pp("1 + 4x + 9x^2 + 4x^3"));
    REQUIRE(near.shapes.size() == 1);
    CHECK_FALSE(near.shapes[0].decomposable);
    CHECK(near.shapes[0].failure == PeelFailure::leading_check);
    CHECK(near.verdict == Verdict::necessary_conditions_hold);
}

TEST_CASE("chain rule on random compositions and the lift bijection")
{
    testing::Random rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = rng.unitary(static_cast<std::size_t>(rng.uniform(2, 4)));
        const auto f = rng.unitary(static_cast<std::size_t>(rng.uniform(2, 4)));
        const auto delta = mono_product(g, f);
        const UniPoly p = derivative(delta.poly());
        CHECK(p == poly_compose(derivative(f.poly()), g.poly()) * derivative(g.poly()));
        const auto pp = PPoly::from_poly(p);
        CHECK(lift_to_mono(pp) == delta);
        const auto report = irreducibility_report(pp);
        CHECK(report.verdict == Verdict::reducible);
        bool seen = false;
        for (const auto& w : report.witnesses) {
            CHECK(w.u * w.v == p);
            seen = seen || w.v == derivative(g.poly());
        }
        CHECK(seen);
    }
}
