#ifndef MONODEC_GAMMA_HPP
#define MONODEC_GAMMA_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "monodec/rational.hpp"
#include "monodec/unipoly.hpp"

namespace monodec {

/// An element of the monoid of unitary monomorphisms x -> x + c_2 x^2 + ... + c_d x^d
/// (c_d != 0), stored through its image polynomial. The identity is x.
class UnitaryMono {
public:
    /// Validates p: zero constant term, linear coefficient 1.
    /// Throws ValidationError("not unitary: ...") otherwise.
    static UnitaryMono from_poly(UniPoly p);
    static UnitaryMono identity();

    const UniPoly& poly() const { return poly_; }
    std::size_t degree() const { return *poly_.degree(); }
    bool is_identity() const { return degree() == 1; }
    /// Coefficient of x^i in the image polynomial.
    Rat coeff(std::size_t i) const { return poly_.coeff(i); }

    friend bool operator==(const UnitaryMono& a, const UnitaryMono& b) { return a.poly_ == b.poly_; }
    friend bool operator!=(const UnitaryMono& a, const UnitaryMono& b) { return !(a == b); }
    friend bool operator<(const UnitaryMono& a, const UnitaryMono& b) { return a.poly_ < b.poly_; }

private:
    explicit UnitaryMono(UniPoly p) : poly_(std::move(p)) {}

    UniPoly poly_;
};

UnitaryMono mono_from_poly(const UniPoly& p);

/// Monoid product. (sigma tau)(x) = sigma(tau(x)) as algebra maps, which as
/// polynomials is tau.poly composed after sigma.poly: the left factor is the
/// inner polynomial.
UnitaryMono mono_product(const UnitaryMono& sigma, const UnitaryMono& tau);

/// sigma(x) = x (1 + (a_{n-1} x^{-(n-1)} + ... + a_1 x^{-1} + 1) lambda x^n),
/// deg sigma = n + 1. a[i-1] holds a_i.
struct RatioForm {
    std::size_t n = 0;
    Rat lambda;
    std::vector<Rat> a;

    /// The unitary polynomial this form describes.
    UnitaryMono rebuild() const;

    friend bool operator==(const RatioForm& x, const RatioForm& y)
    {
        return x.n == y.n && x.lambda == y.lambda && x.a == y.a;
    }
};

/// Throws ValidationError for the identity.
RatioForm ratio_form(const UnitaryMono& sigma);

/// A multi-index alpha = (alpha_1, ..., alpha_k). Position 0 of entries holds
/// alpha_1.
struct MultiIndex {
    std::vector<unsigned> entries;

    std::size_t size() const { return entries.size(); }
    /// |alpha| = alpha_1 + ... + alpha_k
    unsigned norm() const;
    /// alpha_1 + 2 alpha_2 + ... + k alpha_k
    unsigned weight() const;
    /// Product over factorials of the entries.
    BigInt factorial() const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.entries == b.entries; }
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.entries < b.entries; }
};

/// m! / ((m - |alpha|)! alpha_1! ... alpha_k!), the coefficient of a^alpha in
/// (1 + a_1 + ... + a_k)^m. Throws ValidationError when |alpha| > m.
BigInt multinomial(unsigned m, const MultiIndex& alpha);

/// a_1^{alpha_1} ... a_k^{alpha_k} with 0^0 = 1. Requires a.size() >= alpha.size().
Rat monomial_value(const std::vector<Rat>& a, const MultiIndex& alpha);

/// Every alpha in N^k with weight() == weight_target and norm() <= max_norm,
/// in descending lexicographic order ((2,0) before (0,1)).
std::vector<MultiIndex> enumerate_weighted(std::size_t k, unsigned weight_target, unsigned max_norm);

/// sigma(x^m) expanded term by term from the ratio form.
UniPoly sigma_power(const RatioForm& rf, unsigned m);

/// Largest n with sigma(x) - x supported on the powers x^{1+ni}; std::nullopt
/// for the identity, which lies in every level.
std::optional<std::size_t> gamma_level(const UnitaryMono& sigma);

} // namespace monodec

#endif
