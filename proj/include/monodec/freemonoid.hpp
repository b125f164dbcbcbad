#ifndef MONODEC_FREEMONOID_HPP
#define MONODEC_FREEMONOID_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monodec/errors.hpp"
#include "monodec/gamma.hpp"

namespace monodec {

/// The free generator x -> x + lambda x^{n+1}, n >= 1, lambda != 0.
struct Generator {
    std::size_t n = 1;
    Rat lambda{1};

    UnitaryMono mono() const;

    friend bool operator==(const Generator& a, const Generator& b) { return a.n == b.n && a.lambda == b.lambda; }
    friend bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }
};

/// Raised by recover_head / strip_head when the polynomial cannot belong to
/// the free monoid. factor_word turns it into a negative result.
class NotInFreeMonoid : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Left-to-right monoid product; the empty word is the identity.
UnitaryMono word_product(const std::vector<Generator>& word);

struct Head {
    Generator generator;
    /// Degree of the cofactor.
    std::size_t m = 0;
};

/// Reads the innermost generator off the leading term L and pre-leading term P
/// of f: n = deg L - deg P, m = deg f / (n + 1), lambda = m coeff(L) / coeff(P).
Head recover_head(const UniPoly& f);

/// The unique h with h(g(x)) = f, found by descending division by powers of
/// g(x). Throws NotInFreeMonoid when no such unitary h exists.
UniPoly strip_head(const UniPoly& f, const Generator& g);

struct WordOutcome {
    std::optional<std::vector<Generator>> word;
    /// Why f is outside the monoid, when word is empty.
    std::string reason;

    bool in_monoid() const { return word.has_value(); }
};

WordOutcome factor_word(const UnitaryMono& f);

} // namespace monodec

#endif
