#ifndef MONODEC_MPOLY_HPP
#define MONODEC_MPOLY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "monodec/rational.hpp"

namespace monodec {

using Exponents = std::vector<unsigned>;

/// Sparse polynomial over Q in a fixed number of variables x_1..x_k.
/// Variable indices in this class are 0-based (index 0 is x_1). No zero
/// coefficients are stored; the empty map is the zero polynomial.
class MPoly {
public:
    explicit MPoly(std::size_t variables = 0) : vars_(variables) {}

    static MPoly constant(std::size_t variables, const Rat& c);
    /// The polynomial x_{var+1}.
    static MPoly variable(std::size_t variables, std::size_t var);
    static MPoly monomial(const Rat& c, Exponents exps);

    std::size_t variables() const { return vars_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (coefficient of the empty monomial).
    Rat constant_term() const;
    Rat coeff(const Exponents& exps) const;
    /// Total degree; -1 for zero.
    int total_degree() const;
    /// Degree in one variable; -1 for zero.
    int degree_in(std::size_t var) const;

    /// Adds c * x^exps.
    void add_term(const Exponents& exps, const Rat& c);

    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    MPoly& operator*=(const Rat& s);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
    friend MPoly operator*(const Rat& s, MPoly a) { return a *= s; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;

    MPoly pow(unsigned exponent) const;

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Exact division; throws ValidationError when divisor does not divide
    /// this polynomial.
    MPoly divide_exact(const MPoly& divisor) const;

    Rat evaluate(const std::vector<Rat>& point) const;
    /// p(images[0], ..., images[k-1]); every image must share one variable count.
    MPoly substitute(const std::vector<MPoly>& images) const;

    /// Human-readable form using the given variable names, highest total
    /// degree first.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    void check_compatible(const MPoly& other) const;

    std::size_t vars_;
    std::map<Exponents, Rat> terms_;
};

MPoly partial_derivative(const MPoly& p, std::size_t var);

/// Determinant over the polynomial ring by fraction-free (Bareiss) elimination.
MPoly determinant(std::vector<std::vector<MPoly>> matrix);

} // namespace monodec

#endif
