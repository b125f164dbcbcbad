#include "monodec/unipoly.hpp"

#include <algorithm>

#include "monodec/errors.hpp"

namespace monodec {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

UniPoly UniPoly::constant(const Rat& c)
{
    return UniPoly(std::vector<Rat>{c});
}

UniPoly UniPoly::monomial(const Rat& c, std::size_t degree)
{
    std::vector<Rat> coeffs(degree + 1);
    coeffs[degree] = c;
    return UniPoly(std::move(coeffs));
}

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rat UniPoly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rat();
}

std::optional<std::size_t> UniPoly::degree() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

Rat UniPoly::leading_coeff() const
{
    return coeffs_.empty() ? Rat() : coeffs_.back();
}

std::size_t UniPoly::term_count() const
{
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return !c.is_zero(); }));
}

Rat UniPoly::evaluate(const Rat& at) const
{
    Rat acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

UniPoly UniPoly::pow(unsigned exponent) const
{
    UniPoly result = constant(Rat(1));
    UniPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U)
            result = result * base;
        exponent >>= 1U;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rat& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    trim();
    return *this;
}

UniPoly UniPoly::operator-() const
{
    UniPoly out(*this);
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<Rat> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

bool operator<(const UniPoly& a, const UniPoly& b)
{
    if (a.coeffs_.size() != b.coeffs_.size())
        return a.coeffs_.size() < b.coeffs_.size();
    for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
        if (a.coeffs_[i] != b.coeffs_[i])
            return a.coeffs_[i] < b.coeffs_[i];
    }
    return false;
}

UniPoly poly_add(const UniPoly& f, const UniPoly& g)
{
    return f + g;
}

UniPoly poly_mul(const UniPoly& f, const UniPoly& g)
{
    return f * g;
}

UniPoly poly_compose(const UniPoly& f, const UniPoly& g)
{
    UniPoly acc;
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * g;
        acc += UniPoly::constant(*it);
    }
    return acc;
}

UniPoly derivative(const UniPoly& q)
{
    const auto& c = q.coeffs();
    if (c.size() <= 1)
        return {};
    std::vector<Rat> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        out[i - 1] = c[i] * Rat(static_cast<std::int64_t>(i));
    return UniPoly(std::move(out));
}

UniPoly integral(const UniPoly& p)
{
    const auto& c = p.coeffs();
    if (c.empty())
        return {};
    std::vector<Rat> out(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i)
        out[i + 1] = c[i] / Rat(static_cast<std::int64_t>(i + 1));
    return UniPoly(std::move(out));
}

std::pair<Term, Term> leading_and_preleading(const UniPoly& f)
{
    const auto& c = f.coeffs();
    std::optional<Term> lead;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero())
            continue;
        if (!lead) {
            lead = Term{i, c[i]};
            continue;
        }
        return {*lead, Term{i, c[i]}};
    }
    throw ValidationError("no pre-leading term");
}

} // namespace monodec
