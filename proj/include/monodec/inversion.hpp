#ifndef MONODEC_INVERSION_HPP
#define MONODEC_INVERSION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "monodec/decompose.hpp"
#include "monodec/mpoly.hpp"

namespace monodec {

/// The triangular automorphism s of Q[x_1, ..., x_{n-1}] given by
///
///     s(x_j) = m x_j + sum_{alpha in C_j} multinomial(m, alpha) x_1^{alpha_1} ... x_{j-1}^{alpha_{j-1}}
///
/// whose inverse, evaluated at the ratios c_{d-k}/c_d, yields the ratio-form
/// coefficients a_j of the inner factor.
///
/// Functions below take 1-based variable indices i, j (x_1 .. x_{n-1}).
struct TriAuto {
    std::size_t n = 0;
    unsigned m = 0;
    /// images[j-1] = s(x_j)
    std::vector<MPoly> images;
    /// det(d s(x_i) / d x_j) = m^{n-1}
    Rat jacobian_det;
    /// dual_rows[i-1][k] = det of the Jacobian with row i replaced by the k-th
    /// unit row, divided by jacobian_det. Row i of the inverse Jacobian
    /// transposed; dprime is the gradient contracted with it.
    std::vector<std::vector<MPoly>> dual_rows;

    std::size_t variables() const { return n - 1; }
    const MPoly& image(std::size_t j) const { return images.at(j - 1); }
    /// s(p): substitute x_j -> s(x_j).
    MPoly apply(const MPoly& p) const;
};

/// Throws ValidationError for n < 2 (no variables; the scalar path applies)
/// or m < 2. Throws InternalError if the Jacobian is not m^{n-1}.
TriAuto build_automorphism(std::size_t n, unsigned m);

/// The Jacobian matrix (d s(x_i) / d x_j).
std::vector<std::vector<MPoly>> jacobian_matrix(const TriAuto& s);

/// The twisted derivative d/dx_i' : det of the Jacobian with row i replaced
/// by the gradient of p, over the Jacobian determinant.
MPoly dprime(const TriAuto& s, std::size_t i, const MPoly& p);

/// Same value as dprime, evaluated by forming and expanding the determinant
/// for this p directly. Much slower; kept as an independent route.
MPoly dprime_by_determinant(const TriAuto& s, std::size_t i, const MPoly& p);

/// sum_{k=0}^{j} (-1)^k x_i'^k / k! (d/dx_i')^k p, where x_i' = s(x_i).
MPoly phi_truncated(const TriAuto& s, std::size_t i, std::size_t j, const MPoly& p);

/// The untruncated phi_i', summed until the derivative vanishes. Throws
/// InternalError if that does not happen within the degree bound.
MPoly phi(const TriAuto& s, std::size_t i, const MPoly& p);

/// phi_1' ... phi_{n-1}' applied to p. Always a constant polynomial.
MPoly phi_s(const TriAuto& s, const MPoly& p);

/// s^{-1}(a) = sum_alpha phi_s(d'^alpha / alpha! (a)) x^alpha.
MPoly invert(const TriAuto& s, const MPoly& a);

/// x_j written as a polynomial in x_1', ..., x_j' via the truncated phi
/// formula. The result lives in n - 1 variables that stand for x_k'.
/// Throws ValidationError unless 1 <= j <= n - 1.
MPoly inverse_expansion(const TriAuto& s, std::size_t j);
MPoly inverse_expansion(std::size_t n, unsigned m, std::size_t j);

/// inverse_expansion for every j = 1..n-1.
std::vector<MPoly> inverse_table(std::size_t n, unsigned m);

/// a_j = x_j(r_1, ..., r_j) and lambda = m (r_n - S)^{-1}, where
/// r_k = c_{d-k}/c_d and S is the alpha-sum over the recovered a.
/// std::nullopt when r_n == S. For n = 1 no automorphism is involved.
std::optional<FactorCoefficients> closed_form_factors(const std::vector<Rat>& ratios, std::size_t n, unsigned m);
std::optional<FactorCoefficients> closed_form_factors(const std::vector<Rat>& ratios,
                                                      const std::vector<MPoly>& table, std::size_t n,
                                                      unsigned m);

} // namespace monodec

#endif
