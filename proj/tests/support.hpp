// Test-only helpers: seeded random generators and oracles that recompute
// library results along independent routes.
#ifndef MONODEC_TESTS_SUPPORT_HPP
#define MONODEC_TESTS_SUPPORT_HPP

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "monodec/gamma.hpp"
#include "monodec/mpoly.hpp"
#include "monodec/unipoly.hpp"

namespace monodec::testing {

class Random {
public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

    /// num/den with |num| <= max_num and 1 <= den <= max_den.
    Rat rational(int max_num = 9, int max_den = 9)
    {
        return Rat(uniform(-max_num, max_num), uniform(1, max_den));
    }

    Rat nonzero_rational(int max_num = 9, int max_den = 9)
    {
        for (;;) {
            Rat r = rational(max_num, max_den);
            if (!r.is_zero())
                return r;
        }
    }

    /// A unitary polynomial of exactly the given degree (>= 2).
    UnitaryMono unitary(std::size_t degree, int max_num = 9, int max_den = 9)
    {
        std::vector<Rat> c(degree + 1);
        c[1] = Rat(1);
        for (std::size_t i = 2; i < degree; ++i)
            c[i] = rational(max_num, max_den);
        c[degree] = nonzero_rational(max_num, max_den);
        return UnitaryMono::from_poly(UniPoly(std::move(c)));
    }

    /// A unitary polynomial in the level-`level` submonoid: only powers x^{1+level*i}.
    UnitaryMono unitary_in_level(std::size_t level, std::size_t terms)
    {
        const std::size_t degree = 1 + level * terms;
        std::vector<Rat> c(degree + 1);
        c[1] = Rat(1);
        for (std::size_t i = 1; i < terms; ++i)
            c[1 + level * i] = rational(5, 4);
        c[degree] = nonzero_rational(5, 4);
        return UnitaryMono::from_poly(UniPoly(std::move(c)));
    }

    UniPoly poly(std::size_t max_degree, int max_num = 9, int max_den = 9)
    {
        const auto degree = static_cast<std::size_t>(uniform(0, static_cast<int>(max_degree)));
        std::vector<Rat> c(degree + 1);
        for (auto& v : c)
            v = rational(max_num, max_den);
        return UniPoly(std::move(c));
    }

    /// Random polynomial in `vars` variables with total degree <= max_degree.
    MPoly mpoly(std::size_t vars, unsigned max_degree, int terms)
    {
        MPoly p(vars);
        for (int t = 0; t < terms; ++t) {
            Exponents e(vars, 0);
            unsigned budget = static_cast<unsigned>(uniform(0, static_cast<int>(max_degree)));
            while (budget > 0) {
                ++e[static_cast<std::size_t>(uniform(0, static_cast<int>(vars) - 1))];
                --budget;
            }
            p.add_term(e, rational(5, 4));
        }
        return p;
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

/// Splits delta = sigma tau with deg sigma = e_deg using approximate roots:
/// the top e_deg coefficients of sigma / lambda come from the formal m-th root
/// of delta / c_d, then tau is read off by expanding delta in powers of sigma.
/// Returns nothing if that candidate does not recompose to delta.
inline std::optional<std::pair<UnitaryMono, UnitaryMono>> approximate_root_split(const UnitaryMono& delta,
                                                                                   std::size_t e_deg)
{
    const std::size_t d = delta.degree();
    if (e_deg < 2 || d % e_deg != 0 || d / e_deg < 2)
        return std::nullopt;
    const std::size_t n = e_deg - 1;
    const std::size_t m = d / e_deg;
    const Rat cd = delta.poly().leading_coeff();
    // f_k = c_{d-k} / c_d, so delta / c_d = x^d (1 + f_1 y + f_2 y^2 + ...), y = 1/x.
    std::vector<Rat> f(n + 1);
    f[0] = Rat(1);
    for (std::size_t k = 1; k <= n; ++k)
        f[k] = delta.coeff(d - k) / cd;
    // g = f^{1/m}: k g_k = sum_{i=1}^{k} (i/m - (k - i)) f_i g_{k-i}.
    const Rat inv_m = Rat(1) / Rat(static_cast<std::int64_t>(m));
    std::vector<Rat> g(n + 1);
    g[0] = Rat(1);
    for (std::size_t k = 1; k <= n; ++k) {
        Rat acc;
        for (std::size_t i = 1; i <= k; ++i)
            acc += (Rat(static_cast<std::int64_t>(i)) * inv_m - Rat(static_cast<std::int64_t>(k - i))) * f[i] * g[k - i];
        g[k] = acc / Rat(static_cast<std::int64_t>(k));
    }
    if (g[n].is_zero())
        return std::nullopt;
    const Rat lambda = g[n].inverse();
    std::vector<Rat> sc(n + 2);
    for (std::size_t k = 0; k <= n; ++k)
        sc[n + 1 - k] = lambda * g[k];
    const UniPoly sigma(std::move(sc));

    UniPoly rest = delta.poly();
    std::vector<Rat> tc(m + 1);
    for (std::size_t i = m; i >= 1; --i) {
        tc[i] = rest.coeff(i * e_deg) / lambda.pow(static_cast<unsigned>(i));
        rest -= sigma.pow(static_cast<unsigned>(i)) * tc[i];
    }
    if (!rest.is_zero() || !tc[1].is_one() || !sigma.coeff(1).is_one())
        return std::nullopt;
    const UnitaryMono s = UnitaryMono::from_poly(sigma);
    const UnitaryMono t = UnitaryMono::from_poly(UniPoly(std::move(tc)));
    if (poly_compose(t.poly(), s.poly()) != delta.poly())
        return std::nullopt;
    return std::make_pair(s, t);
}

/// Every alpha in the box [0, max_norm]^k with the requested weight and norm
/// bound, ascending lexicographic.
inline std::vector<std::vector<unsigned>> brute_weighted(std::size_t k, unsigned weight, unsigned max_norm)
{
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(k, 0);
    for (;;) {
        unsigned w = 0;
        unsigned norm = 0;
        for (std::size_t i = 0; i < k; ++i) {
            w += static_cast<unsigned>(i + 1) * cur[i];
            norm += cur[i];
        }
        if (w == weight && norm <= max_norm)
            out.push_back(cur);
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (cur[pos] < max_norm) {
                ++cur[pos];
                break;
            }
            cur[pos] = 0;
            if (pos == 0)
                return out;
        }
        if (k == 0)
            return out;
    }
}

/// Determinant by cofactor expansion along the first row. No division.
inline MPoly laplace_determinant(const std::vector<std::vector<MPoly>>& m)
{
    const std::size_t size = m.size();
    if (size == 1)
        return m[0][0];
    MPoly total(m[0][0].variables());
    for (std::size_t col = 0; col < size; ++col) {
        std::vector<std::vector<MPoly>> minor;
        for (std::size_t r = 1; r < size; ++r) {
            std::vector<MPoly> row;
            for (std::size_t c = 0; c < size; ++c) {
                if (c != col)
                    row.push_back(m[r][c]);
            }
            minor.push_back(std::move(row));
        }
        MPoly term = m[0][col] * laplace_determinant(minor);
        if (col % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

/// Inverts the triangular s(x_j) = m x_j + lower(x_1..x_{j-1}) by back
/// substitution: x_j = (y_j - lower(x_1(y), ..., x_{j-1}(y))) / m.
inline std::vector<MPoly> back_substitution_inverse(const std::vector<MPoly>& images, unsigned m)
{
    const std::size_t vars = images.size();
    std::vector<MPoly> x_of_y;
    for (std::size_t j = 0; j < vars; ++j) {
        Exponents e(vars, 0);
        e[j] = 1;
        MPoly lower = images[j];
        lower.add_term(e, -Rat(static_cast<std::int64_t>(m)));
        std::vector<MPoly> subst = x_of_y;
        for (std::size_t k = j; k < vars; ++k)
            subst.push_back(MPoly::variable(vars, k));
        MPoly xj = (MPoly::variable(vars, j) - lower.substitute(subst)) * (Rat(1) / Rat(static_cast<std::int64_t>(m)));
        x_of_y.push_back(std::move(xj));
    }
    return x_of_y;
}

} // namespace monodec::testing

#endif
