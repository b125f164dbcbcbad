#include "monodec/gamma.hpp"

#include <numeric>

#include "monodec/errors.hpp"

namespace monodec {

UnitaryMono UnitaryMono::from_poly(UniPoly p)
{
    if (p.is_zero())
        throw ValidationError("not unitary: zero polynomial");
    if (!p.coeff(0).is_zero())
        throw ValidationError("not unitary: constant term must be 0");
    if (!p.coeff(1).is_one())
        throw ValidationError("not unitary: coefficient of x must be 1");
    return UnitaryMono(std::move(p));
}

UnitaryMono UnitaryMono::identity()
{
    return UnitaryMono(UniPoly::x());
}

UnitaryMono mono_from_poly(const UniPoly& p)
{
    return UnitaryMono::from_poly(p);
}

UnitaryMono mono_product(const UnitaryMono& sigma, const UnitaryMono& tau)
{
    return UnitaryMono::from_poly(poly_compose(tau.poly(), sigma.poly()));
}

UnitaryMono RatioForm::rebuild() const
{
    if (n == 0 || lambda.is_zero() || a.size() + 1 != n)
        throw ValidationError("malformed ratio form");
    std::vector<Rat> coeffs(n + 2);
    coeffs[1] = Rat(1);
    coeffs[n + 1] = lambda;
    for (std::size_t i = 1; i < n; ++i)
        coeffs[n + 1 - i] = lambda * a[i - 1];
    return UnitaryMono::from_poly(UniPoly(std::move(coeffs)));
}

RatioForm ratio_form(const UnitaryMono& sigma)
{
    if (sigma.is_identity())
        throw ValidationError("identity has no ratio form");
    RatioForm rf;
    rf.n = sigma.degree() - 1;
    rf.lambda = sigma.poly().leading_coeff();
    rf.a.reserve(rf.n - 1);
    for (std::size_t i = 1; i < rf.n; ++i)
        rf.a.push_back(sigma.coeff(rf.n + 1 - i) / rf.lambda);
    return rf;
}

unsigned MultiIndex::norm() const
{
    return std::accumulate(entries.begin(), entries.end(), 0U);
}

unsigned MultiIndex::weight() const
{
    unsigned w = 0;
    for (std::size_t i = 0; i < entries.size(); ++i)
        w += static_cast<unsigned>(i + 1) * entries[i];
    return w;
}

BigInt MultiIndex::factorial() const
{
    BigInt out = 1;
    for (unsigned e : entries)
        out *= monodec::factorial(e);
    return out;
}

BigInt multinomial(unsigned m, const MultiIndex& alpha)
{
    const unsigned norm = alpha.norm();
    if (norm > m)
        throw ValidationError("multinomial: |alpha| exceeds m");
    return factorial(m) / (factorial(m - norm) * alpha.factorial());
}

Rat monomial_value(const std::vector<Rat>& a, const MultiIndex& alpha)
{
    Rat out(1);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha.entries[i] != 0)
            out *= a.at(i).pow(alpha.entries[i]);
    }
    return out;
}

namespace {

void enumerate_from(std::size_t pos, unsigned remaining_weight, unsigned remaining_norm,
                    MultiIndex& current, std::vector<MultiIndex>& out)
{
    const std::size_t k = current.entries.size();
    if (pos == k) {
        if (remaining_weight == 0)
            out.push_back(current);
        return;
    }
    const auto w = static_cast<unsigned>(pos + 1);
    // Positions past pos can absorb at most remaining_norm * k weight.
    const unsigned top = std::min(remaining_weight / w, remaining_norm);
    for (unsigned v = top + 1; v-- > 0;) {
        const unsigned rest_weight = remaining_weight - v * w;
        const unsigned rest_norm = remaining_norm - v;
        if (rest_weight > rest_norm * static_cast<unsigned>(k))
            continue;
        current.entries[pos] = v;
        enumerate_from(pos + 1, rest_weight, rest_norm, current, out);
    }
    current.entries[pos] = 0;
}

} // namespace

std::vector<MultiIndex> enumerate_weighted(std::size_t k, unsigned weight_target, unsigned max_norm)
{
    std::vector<MultiIndex> out;
    MultiIndex current{std::vector<unsigned>(k, 0)};
    enumerate_from(0, weight_target, max_norm, current, out);
    return out;
}

UniPoly sigma_power(const RatioForm& rf, unsigned m)
{
    if (m == 0)
        throw ValidationError("sigma_power: m must be positive");
    const std::size_t n = rf.n;
    std::vector<Rat> coeffs(m * (n + 1) + 1);
    coeffs[m] = Rat(1);
    Rat lambda_pow(1);
    for (unsigned i = 1; i <= m; ++i) {
        lambda_pow *= rf.lambda;
        const Rat outer = Rat(binomial(m, i)) * lambda_pow;
        coeffs[m + i * n] += outer;
        for (unsigned w = 1; w <= static_cast<unsigned>(n - 1) * i; ++w) {
            for (const auto& alpha : enumerate_weighted(n - 1, w, i)) {
                if (alpha.norm() == 0)
                    continue;
                coeffs[m + i * n - w] += outer * Rat(multinomial(i, alpha)) * monomial_value(rf.a, alpha);
            }
        }
    }
    return UniPoly(std::move(coeffs));
}

std::optional<std::size_t> gamma_level(const UnitaryMono& sigma)
{
    std::size_t g = 0;
    const auto& c = sigma.poly().coeffs();
    for (std::size_t i = 2; i < c.size(); ++i) {
        if (!c[i].is_zero())
            g = std::gcd(g, i - 1);
    }
    if (g == 0)
        return std::nullopt;
    return g;
}

} // namespace monodec
