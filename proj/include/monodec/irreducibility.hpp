#ifndef MONODEC_IRREDUCIBILITY_HPP
#define MONODEC_IRREDUCIBILITY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "monodec/decompose.hpp"

namespace monodec {

/// A polynomial 1 + l_1 x + ... + l_t x^t with t >= 1 and l_t != 0.
class PPoly {
public:
    /// Throws ValidationError unless p has constant term 1 and degree >= 1.
    static PPoly from_poly(UniPoly p);

    const UniPoly& poly() const { return poly_; }
    std::size_t degree() const { return *poly_.degree(); }

private:
    explicit PPoly(UniPoly p) : poly_(std::move(p)) {}

    UniPoly poly_;
};

/// The unique unitary delta_p with delta_p' = p and delta_p(0) = 0.
UnitaryMono lift_to_mono(const PPoly& p);

struct Witness {
    UniPoly u;  // f'(g)
    UniPoly v;  // g'

    friend bool operator==(const Witness& a, const Witness& b) { return a.u == b.u && a.v == b.v; }
};

/// One chain-rule factorization p = f'(g) g' per split delta_p = sigma tau,
/// with g = sigma(x) and f = tau(x).
std::vector<Witness> reducibility_witness(const PPoly& p);

struct ShapeResult {
    std::size_t n = 0;
    std::size_t m = 0;
    bool decomposable = false;
    PeelFailure failure = PeelFailure::none;
};

enum class Verdict {
    reducible,
    /// The necessary conditions for irreducibility hold. Not a proof of
    /// irreducibility.
    necessary_conditions_hold,
};

const char* to_string(Verdict verdict);

struct IrredReport {
    PPoly input;
    UnitaryMono lift;
    /// Every (n, m) with m >= 2, n >= 1 and m (n + 1) = deg p + 1.
    std::vector<ShapeResult> shapes;
    /// Distinct witnesses; each multiplies to p exactly.
    std::vector<Witness> witnesses;
    Verdict verdict = Verdict::necessary_conditions_hold;
};

IrredReport irreducibility_report(const PPoly& p);

} // namespace monodec

#endif
