#include "monodec/decompose.hpp"

#include <algorithm>

#include "monodec/errors.hpp"

namespace monodec {

const char* to_string(PeelFailure failure)
{
    switch (failure) {
    case PeelFailure::none:
        return "none";
    case PeelFailure::lambda_undefined:
        return "lambda-undefined";
    case PeelFailure::leading_check:
        return "mu-check";
    case PeelFailure::middle_check:
        return "middle-coefficient-check";
    }
    return "unknown";
}

std::string PeelOutcome::describe() const
{
    switch (failure) {
    case PeelFailure::none:
        return "factor found";
    case PeelFailure::lambda_undefined:
        return "no factor (lambda undefined)";
    case PeelFailure::leading_check:
        return "no factor (leading coefficient c_d != mu_m lambda^m)";
    case PeelFailure::middle_check:
        return "no factor (coefficient of x^" + std::to_string(failed_index.value_or(0)) +
               " violates the check equation)";
    }
    return "no factor";
}

std::vector<Rat> top_ratios(const UnitaryMono& delta, std::size_t n)
{
    const std::size_t d = delta.degree();
    if (n >= d)
        throw ValidationError("top_ratios: n must be below the degree");
    const Rat cd_inv = delta.poly().leading_coeff().inverse();
    std::vector<Rat> ratios;
    ratios.reserve(n);
    for (std::size_t j = 1; j <= n; ++j)
        ratios.push_back(delta.coeff(d - j) * cd_inv);
    return ratios;
}

std::optional<FactorCoefficients> solve_factor_coefficients(const std::vector<Rat>& ratios, std::size_t n,
                                                            unsigned m)
{
    if (n == 0 || ratios.size() != n || m < 2)
        throw ValidationError("solve_factor_coefficients: need n >= 1, m >= 2 and n ratios");
    const Rat m_rat(static_cast<std::int64_t>(m));
    FactorCoefficients out;
    out.a.reserve(n - 1);
    // m a_j + sum_{C_j} multinomial(m, alpha) a^alpha = r_j, alpha over a_1..a_{j-1}.
    for (std::size_t j = 1; j < n; ++j) {
        Rat rhs = ratios[j - 1];
        for (const auto& alpha : enumerate_weighted(j - 1, static_cast<unsigned>(j), m))
            rhs -= Rat(multinomial(m, alpha)) * monomial_value(out.a, alpha);
        out.a.push_back(rhs / m_rat);
    }
    Rat s;
    for (const auto& alpha : enumerate_weighted(n - 1, static_cast<unsigned>(n), m))
        s += Rat(multinomial(m, alpha)) * monomial_value(out.a, alpha);
    const Rat denom = ratios[n - 1] - s;
    if (denom.is_zero())
        return std::nullopt;
    out.lambda = m_rat / denom;
    return out;
}

PeelOutcome peel(const UnitaryMono& delta, std::size_t e_deg)
{
    const std::size_t d = delta.degree();
    if (e_deg < 2 || d % e_deg != 0 || d / e_deg < 2) {
        throw ValidationError("invalid split shape: degree " + std::to_string(e_deg) + " factor of a degree " +
                              std::to_string(d) + " polynomial");
    }
    const std::size_t n = e_deg - 1;
    const std::size_t m = d / e_deg;

    PeelOutcome outcome;
    const auto coeffs = solve_factor_coefficients(top_ratios(delta, n), n, static_cast<unsigned>(m));
    if (!coeffs) {
        outcome.failure = PeelFailure::lambda_undefined;
        return outcome;
    }

    RatioForm rf{n, coeffs->lambda, coeffs->a};
    const UniPoly sigma_poly = rf.rebuild().poly();

    // sums[j] = sum over m' of mu_{m'} [x^j](sigma(x)^{m'} - x^{m'}). Since
    // sigma^{m'} - x^{m'} starts at x^{m'+n}, sums[j] is final once m' >= j:
    // for j <= m it is the D_j / E_j sum that fixes mu_j = c_j - sums[j], and
    // for m < j < d - n the F_j / G_j sum that c_j must equal.
    std::vector<Rat> sums(d + 1);
    std::vector<Rat> mu(m);
    UniPoly power = UniPoly::constant(Rat(1));
    for (std::size_t mp = 1; mp <= m; ++mp) {
        mu[mp - 1] = delta.coeff(mp) - sums[mp];
        power = power * sigma_poly;
        if (mu[mp - 1].is_zero())
            continue;
        const auto& pc = power.coeffs();
        for (std::size_t k = mp + 1; k < pc.size(); ++k) {
            if (!pc[k].is_zero())
                sums[k] += mu[mp - 1] * pc[k];
        }
    }

    if (delta.poly().leading_coeff() != mu[m - 1] * rf.lambda.pow(static_cast<unsigned>(m))) {
        outcome.failure = PeelFailure::leading_check;
    } else {
        for (std::size_t j = m + 1; j + n < d; ++j) {
            if (delta.coeff(j) != sums[j]) {
                outcome.failure = PeelFailure::middle_check;
                outcome.failed_index = j;
                break;
            }
        }
    }

    // Recomposition guard: the analytic verdict must match a direct check.
    const UnitaryMono sigma = UnitaryMono::from_poly(sigma_poly);
    std::vector<Rat> tau_coeffs(m + 1);
    std::copy(mu.begin(), mu.end(), tau_coeffs.begin() + 1);
    const UnitaryMono tau = UnitaryMono::from_poly(UniPoly(std::move(tau_coeffs)));
    const bool recomposes = mono_product(sigma, tau) == delta;
    const bool checks_pass = outcome.failure == PeelFailure::none;
    if (recomposes != checks_pass) {
        throw InternalError("peel: coefficient checks (" + std::string(to_string(outcome.failure)) +
                            ") disagree with recomposition");
    }
    if (checks_pass)
        outcome.result = PeelResult{sigma, tau, std::move(rf), std::move(mu)};
    return outcome;
}

std::vector<ShapePeel> is_decomposable(const UnitaryMono& delta)
{
    if (delta.is_identity())
        throw ValidationError("the identity has no decompositions");
    const std::size_t d = delta.degree();
    std::vector<ShapePeel> out;
    for (std::size_t e = 2; e <= d / 2; ++e) {
        if (d % e != 0)
            continue;
        auto outcome = peel(delta, e);
        if (outcome.found())
            out.push_back(ShapePeel{e, std::move(*outcome.result)});
    }
    return out;
}

bool signature_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

std::vector<Decomposition> enumerate_decompositions(const UnitaryMono& delta)
{
    std::vector<Decomposition> out;
    out.push_back(Decomposition{{delta}, {delta.degree()}});
    for (const auto& shape : is_decomposable(delta)) {
        for (auto rest : enumerate_decompositions(shape.result.tau)) {
            rest.factors.insert(rest.factors.begin(), shape.result.sigma);
            rest.signature.insert(rest.signature.begin(), shape.e_deg);
            out.push_back(std::move(rest));
        }
    }
    std::sort(out.begin(), out.end(), [](const Decomposition& x, const Decomposition& y) {
        if (x.signature != y.signature)
            return signature_less(x.signature, y.signature);
        return x.factors < y.factors;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Decomposition& x, const Decomposition& y) { return x.factors == y.factors; }),
              out.end());
    return out;
}

std::vector<std::vector<std::size_t>> signature_set(const UnitaryMono& delta)
{
    std::vector<std::vector<std::size_t>> out;
    for (auto& dec : enumerate_decompositions(delta))
        out.push_back(std::move(dec.signature));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace monodec
