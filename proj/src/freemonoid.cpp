#include "monodec/freemonoid.hpp"

#include <tuple>

namespace monodec {

UnitaryMono Generator::mono() const
{
    if (n < 1 || lambda.is_zero())
        throw ValidationError("generator needs n >= 1 and lambda != 0");
    return UnitaryMono::from_poly(UniPoly::x() + UniPoly::monomial(lambda, n + 1));
}

UnitaryMono word_product(const std::vector<Generator>& word)
{
    UnitaryMono out = UnitaryMono::identity();
    for (const auto& g : word)
        out = mono_product(out, g.mono());
    return out;
}

Head recover_head(const UniPoly& f)
{
    const auto deg = f.degree();
    if (!deg || *deg < 2)
        throw NotInFreeMonoid("not in free monoid (head): degree below 2");
    Term lead;
    Term pre;
    try {
        std::tie(lead, pre) = leading_and_preleading(f);
    } catch (const ValidationError&) {
        throw NotInFreeMonoid("not in free monoid (head): no pre-leading term");
    }
    const std::size_t n = lead.degree - pre.degree;
    if (*deg % (n + 1) != 0) {
        throw NotInFreeMonoid("not in free monoid (head): degree " + std::to_string(*deg) +
                              " is not a multiple of " + std::to_string(n + 1));
    }
    const std::size_t m = *deg / (n + 1);
    const Rat lambda = Rat(static_cast<std::int64_t>(m)) * lead.coeff / pre.coeff;
    return Head{Generator{n, lambda}, m};
}

UniPoly strip_head(const UniPoly& f, const Generator& g)
{
    const auto deg = f.degree();
    const std::size_t step = g.n + 1;
    if (!deg || *deg % step != 0)
        throw NotInFreeMonoid("not in free monoid (strip): degree is not a multiple of " + std::to_string(step));
    const UniPoly base = g.mono().poly();
    const std::size_t top = *deg / step;

    // Powers g^0..g^top; g^i has leading term lambda^i x^{i(n+1)}.
    std::vector<UniPoly> powers{UniPoly::constant(Rat(1))};
    for (std::size_t i = 1; i <= top; ++i)
        powers.push_back(powers.back() * base);

    UniPoly remainder = f;
    std::vector<Rat> h(top + 1);
    for (std::size_t i = top + 1; i-- > 0;) {
        h[i] = remainder.coeff(i * step) / g.lambda.pow(static_cast<unsigned>(i));
        if (!h[i].is_zero())
            remainder -= powers[i] * h[i];
    }
    if (!remainder.is_zero())
        throw NotInFreeMonoid("not in free monoid (strip): nonzero remainder");
    UniPoly out(std::move(h));
    if (!out.coeff(0).is_zero() || !out.coeff(1).is_one())
        throw NotInFreeMonoid("not in free monoid (strip): cofactor is not unitary");
    return out;
}

WordOutcome factor_word(const UnitaryMono& f)
{
    WordOutcome outcome;
    std::vector<Generator> word;
    UniPoly rest = f.poly();
    try {
        while (rest != UniPoly::x()) {
            const Head head = recover_head(rest);
            rest = strip_head(rest, head.generator);
            word.push_back(head.generator);
        }
    } catch (const NotInFreeMonoid& e) {
        outcome.reason = std::string("not in M: ") + e.what();
        return outcome;
    }
    outcome.word = std::move(word);
    return outcome;
}

} // namespace monodec
