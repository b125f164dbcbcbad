#ifndef MONODEC_UNIPOLY_HPP
#define MONODEC_UNIPOLY_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "monodec/rational.hpp"

namespace monodec {

/// A single monomial coeff·x^degree.
struct Term {
    std::size_t degree = 0;
    Rat coeff;

    friend bool operator==(const Term& a, const Term& b) { return a.degree == b.degree && a.coeff == b.coeff; }
};

/// Dense univariate polynomial over Q. Index i of coeffs() holds the
/// coefficient of x^i; the top stored coefficient is never zero, so the
/// zero polynomial stores nothing and has no degree.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);

    static UniPoly constant(const Rat& c);
    static UniPoly monomial(const Rat& c, std::size_t degree);
    /// The polynomial x.
    static UniPoly x() { return monomial(Rat(1), 1); }

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    Rat coeff(std::size_t i) const;

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// std::nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    /// Leading coefficient; zero for the zero polynomial.
    Rat leading_coeff() const;
    std::size_t term_count() const;

    Rat evaluate(const Rat& at) const;
    UniPoly pow(unsigned exponent) const;

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const Rat& scalar);

    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
    friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
    friend UniPoly operator*(UniPoly lhs, const Rat& s) { return lhs *= s; }
    friend UniPoly operator*(const Rat& s, UniPoly rhs) { return rhs *= s; }
    friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
    UniPoly operator-() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }
    /// Arbitrary but total order (degree first, then coefficients), for sorting.
    friend bool operator<(const UniPoly& a, const UniPoly& b);

private:
    void trim();

    std::vector<Rat> coeffs_;
};

UniPoly poly_add(const UniPoly& f, const UniPoly& g);
UniPoly poly_mul(const UniPoly& f, const UniPoly& g);

/// f(g(x)), by Horner's rule.
UniPoly poly_compose(const UniPoly& f, const UniPoly& g);

UniPoly derivative(const UniPoly& q);

/// The antiderivative with zero constant term.
UniPoly integral(const UniPoly& p);

/// The two highest-degree nonzero terms, leading first. Throws
/// ValidationError("no pre-leading term") when f has fewer than two terms.
std::pair<Term, Term> leading_and_preleading(const UniPoly& f);

} // namespace monodec

#endif
