#include "monodec/inversion.hpp"

#include <functional>

#include "monodec/errors.hpp"

namespace monodec {

namespace {

void check_var(const TriAuto& s, std::size_t i)
{
    if (i < 1 || i > s.variables())
        throw ValidationError("variable index " + std::to_string(i) + " out of range 1.." +
                              std::to_string(s.variables()));
}

void check_poly(const TriAuto& s, const MPoly& p)
{
    if (p.variables() != s.variables())
        throw ValidationError("variable-count mismatch");
}

Rat signed_inverse_factorial(std::size_t k)
{
    Rat r(BigInt(1), factorial(static_cast<unsigned>(k)));
    return k % 2 == 0 ? r : -r;
}

} // namespace

MPoly TriAuto::apply(const MPoly& p) const
{
    return p.substitute(images);
}

TriAuto build_automorphism(std::size_t n, unsigned m)
{
    if (n < 2)
        throw ValidationError("degenerate automorphism (n < 2 has no variables); use the scalar path");
    if (m < 2)
        throw ValidationError("automorphism needs m >= 2");
    TriAuto s;
    s.n = n;
    s.m = m;
    const std::size_t vars = n - 1;
    for (std::size_t j = 1; j <= vars; ++j) {
        MPoly image = MPoly::variable(vars, j - 1) * Rat(static_cast<std::int64_t>(m));
        for (const auto& alpha : enumerate_weighted(j - 1, static_cast<unsigned>(j), m)) {
            Exponents e(vars, 0);
            std::copy(alpha.entries.begin(), alpha.entries.end(), e.begin());
            image.add_term(e, Rat(multinomial(m, alpha)));
        }
        s.images.push_back(std::move(image));
    }

    const auto jac = jacobian_matrix(s);
    const MPoly det = determinant(jac);
    const Rat expected = Rat(static_cast<std::int64_t>(m)).pow(static_cast<unsigned>(vars));
    if (!det.is_constant() || det.constant_term() != expected)
        throw InternalError("triangular automorphism has Jacobian " + det.to_string({}) + ", expected m^(n-1)");
    s.jacobian_det = expected;

    const Rat det_inv = expected.inverse();
    s.dual_rows.assign(vars, std::vector<MPoly>(vars, MPoly(vars)));
    for (std::size_t i = 0; i < vars; ++i) {
        for (std::size_t k = 0; k < vars; ++k) {
            auto replaced = jac;
            for (std::size_t c = 0; c < vars; ++c)
                replaced[i][c] = MPoly::constant(vars, Rat(c == k ? 1 : 0));
            s.dual_rows[i][k] = determinant(std::move(replaced)) * det_inv;
        }
    }
    return s;
}

std::vector<std::vector<MPoly>> jacobian_matrix(const TriAuto& s)
{
    const std::size_t vars = s.variables();
    std::vector<std::vector<MPoly>> jac(vars, std::vector<MPoly>(vars, MPoly(vars)));
    for (std::size_t i = 0; i < vars; ++i) {
        for (std::size_t j = 0; j < vars; ++j)
            jac[i][j] = partial_derivative(s.images[i], j);
    }
    return jac;
}

MPoly dprime(const TriAuto& s, std::size_t i, const MPoly& p)
{
    check_var(s, i);
    check_poly(s, p);
    MPoly out(s.variables());
    for (std::size_t k = 0; k < s.variables(); ++k) {
        const MPoly dp = partial_derivative(p, k);
        if (!dp.is_zero())
            out += dp * s.dual_rows[i - 1][k];
    }
    return out;
}

MPoly dprime_by_determinant(const TriAuto& s, std::size_t i, const MPoly& p)
{
    check_var(s, i);
    check_poly(s, p);
    auto matrix = jacobian_matrix(s);
    for (std::size_t k = 0; k < s.variables(); ++k)
        matrix[i - 1][k] = partial_derivative(p, k);
    return determinant(std::move(matrix)) * s.jacobian_det.inverse();
}

MPoly phi_truncated(const TriAuto& s, std::size_t i, std::size_t j, const MPoly& p)
{
    check_var(s, i);
    check_poly(s, p);
    MPoly acc = p;
    MPoly deriv = p;
    MPoly x_pow = MPoly::constant(s.variables(), Rat(1));
    for (std::size_t k = 1; k <= j; ++k) {
        deriv = dprime(s, i, deriv);
        if (deriv.is_zero())
            break;
        x_pow = x_pow * s.image(i);
        acc += (x_pow * deriv) * signed_inverse_factorial(k);
    }
    return acc;
}

MPoly phi(const TriAuto& s, std::size_t i, const MPoly& p)
{
    check_var(s, i);
    check_poly(s, p);
    // Every x_k has x'-degree at most k <= n-1, so p has x'-degree at most
    // (n-1) deg p and the derivatives vanish before this cap.
    const std::size_t cap = s.variables() * static_cast<std::size_t>(std::max(p.total_degree(), 0)) + s.n + 2;
    MPoly acc = p;
    MPoly deriv = p;
    MPoly x_pow = MPoly::constant(s.variables(), Rat(1));
    for (std::size_t k = 1;; ++k) {
        deriv = dprime(s, i, deriv);
        if (deriv.is_zero())
            return acc;
        if (k > cap)
            throw InternalError("phi: iteration cap exceeded");
        x_pow = x_pow * s.image(i);
        acc += (x_pow * deriv) * signed_inverse_factorial(k);
    }
}

MPoly phi_s(const TriAuto& s, const MPoly& p)
{
    MPoly out = p;
    for (std::size_t i = s.variables(); i >= 1; --i)
        out = phi(s, i, out);
    return out;
}

namespace {

// Walks every alpha over the first `var_limit` variables with d'^alpha(a) != 0,
// visiting each exactly once (indices applied in nondecreasing order), and
// hands (alpha, d'^alpha(a) / alpha!) to visit.
void walk_derivatives(const TriAuto& s, const MPoly& a, std::size_t var_limit, std::size_t depth_limit,
                      const std::function<void(const Exponents&, const MPoly&)>& visit)
{
    Exponents alpha(s.variables(), 0);
    std::function<void(const MPoly&, std::size_t, std::size_t)> go = [&](const MPoly& q, std::size_t first,
                                                                         std::size_t depth) {
        visit(alpha, q);
        if (depth == depth_limit)
            return;
        for (std::size_t k = first; k < var_limit; ++k) {
            MPoly child = dprime(s, k + 1, q);
            if (child.is_zero())
                continue;
            ++alpha[k];
            child *= Rat(BigInt(1), BigInt(alpha[k]));
            go(child, k, depth + 1);
            --alpha[k];
        }
    };
    go(a, 0, 0);
}

MPoly require_constant(const MPoly& p, const char* where)
{
    if (!p.is_constant())
        throw InternalError(std::string(where) + ": phi chain left a non-constant polynomial");
    return p;
}

} // namespace

MPoly invert(const TriAuto& s, const MPoly& a)
{
    check_poly(s, a);
    const std::size_t vars = s.variables();
    // x'-degree bound of a; derivatives are zero past it.
    const std::size_t depth_limit = vars * static_cast<std::size_t>(std::max(a.total_degree(), 0)) + 1;
    MPoly out(vars);
    bool overflow = false;
    walk_derivatives(s, a, vars, depth_limit, [&](const Exponents& alpha, const MPoly& q) {
        std::size_t depth = 0;
        for (unsigned e : alpha)
            depth += e;
        if (depth == depth_limit)
            overflow = true;
        const Rat c = require_constant(phi_s(s, q), "invert").constant_term();
        out.add_term(alpha, c);
    });
    if (overflow)
        throw InternalError("invert: derivative chain exceeded the degree bound");
    return out;
}

MPoly inverse_expansion(const TriAuto& s, std::size_t j)
{
    if (j < 1 || j > s.variables())
        throw ValidationError("inverse_expansion: j must lie in 1..n-1");
    const MPoly target = MPoly::variable(s.variables(), j - 1);
    MPoly out(s.variables());
    walk_derivatives(s, target, j, j, [&](const Exponents& alpha, const MPoly& q) {
        std::size_t norm = 0;
        for (unsigned e : alpha)
            norm += e;
        const std::size_t trunc = j - norm;
        MPoly value = q;
        for (std::size_t i = j; i >= 1; --i)
            value = phi_truncated(s, i, trunc, value);
        out.add_term(alpha, require_constant(value, "inverse_expansion").constant_term());
    });
    return out;
}

MPoly inverse_expansion(std::size_t n, unsigned m, std::size_t j)
{
    return inverse_expansion(build_automorphism(n, m), j);
}

std::vector<MPoly> inverse_table(std::size_t n, unsigned m)
{
    const TriAuto s = build_automorphism(n, m);
    std::vector<MPoly> table;
    for (std::size_t j = 1; j <= s.variables(); ++j)
        table.push_back(inverse_expansion(s, j));
    return table;
}

std::optional<FactorCoefficients> closed_form_factors(const std::vector<Rat>& ratios,
                                                      const std::vector<MPoly>& table, std::size_t n,
                                                      unsigned m)
{
    if (n == 0 || ratios.size() != n || m < 2 || table.size() + 1 != n)
        throw ValidationError("closed_form_factors: need n >= 1, m >= 2, n ratios and n-1 expansions");
    FactorCoefficients out;
    const std::vector<Rat> point(ratios.begin(), ratios.end() - 1);
    for (const auto& xj : table)
        out.a.push_back(xj.evaluate(point));
    Rat s;
    for (const auto& alpha : enumerate_weighted(n - 1, static_cast<unsigned>(n), m))
        s += Rat(multinomial(m, alpha)) * monomial_value(out.a, alpha);
    const Rat denom = ratios[n - 1] - s;
    if (denom.is_zero())
        return std::nullopt;
    out.lambda = Rat(static_cast<std::int64_t>(m)) * denom.inverse();
    return out;
}

std::optional<FactorCoefficients> closed_form_factors(const std::vector<Rat>& ratios, std::size_t n, unsigned m)
{
    if (n == 1)
        return closed_form_factors(ratios, {}, n, m);
    return closed_form_factors(ratios, inverse_table(n, m), n, m);
}

} // namespace monodec
