#ifndef MONODEC_DECOMPOSE_HPP
#define MONODEC_DECOMPOSE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monodec/gamma.hpp"

namespace monodec {

/// delta = sigma tau with deg sigma = n + 1 and deg tau = m.
struct PeelResult {
    UnitaryMono sigma;
    UnitaryMono tau;
    RatioForm ratio;
    /// mu[k] is the coefficient of x^{k+1} in tau(x); mu[0] == 1.
    std::vector<Rat> mu;
};

/// Where a peel attempt stopped.
enum class PeelFailure {
    none,
    /// c_{d-n}/c_d equals the alpha-sum, so lambda has no value.
    lambda_undefined,
    /// c_d != mu_m lambda^m
    leading_check,
    /// one of the middle coefficients c_j, m < j < d - n, disagrees.
    middle_check,
};

const char* to_string(PeelFailure failure);

struct PeelOutcome {
    std::optional<PeelResult> result;
    PeelFailure failure = PeelFailure::none;
    /// For middle_check: the first offending j.
    std::optional<std::size_t> failed_index;

    bool found() const { return result.has_value(); }
    std::string describe() const;
};

/// The intermediate values of the coefficient solve for one shape, exposed so
/// the closed-form route can be compared against it.
struct FactorCoefficients {
    std::vector<Rat> a;  // a_1..a_{n-1}
    Rat lambda;
};

/// The ratios c_{d-1}/c_d, ..., c_{d-n}/c_d.
std::vector<Rat> top_ratios(const UnitaryMono& delta, std::size_t n);

/// Forward substitution for a_1..a_{n-1}, then lambda = m / (r_n - S). Reads
/// only the ratios. std::nullopt when r_n == S.
std::optional<FactorCoefficients> solve_factor_coefficients(const std::vector<Rat>& ratios, std::size_t n,
                                                            unsigned m);

/// Recovers the unique (sigma, tau) with delta = sigma tau and deg sigma = e_deg,
/// or reports which check ruled it out.
///
/// Throws ValidationError("invalid split shape ...") unless e_deg >= 2,
/// e_deg | deg delta and deg delta / e_deg >= 2. Throws InternalError if the
/// coefficient checks ever disagree with a direct recomposition.
PeelOutcome peel(const UnitaryMono& delta, std::size_t e_deg);

struct ShapePeel {
    std::size_t e_deg = 0;
    PeelResult result;
};

/// All successful peels over the divisors 2 <= e_deg <= d/2 of d = deg delta.
/// Empty iff delta is indecomposable.
std::vector<ShapePeel> is_decomposable(const UnitaryMono& delta);

struct Decomposition {
    std::vector<UnitaryMono> factors;
    std::vector<std::size_t> signature;
};

/// Signature ordering used for all sorted output: shorter tuples first, then
/// lexicographic.
bool signature_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

/// The full decomposition set of delta, sorted by signature. Always contains
/// the singleton (delta).
std::vector<Decomposition> enumerate_decompositions(const UnitaryMono& delta);

std::vector<std::vector<std::size_t>> signature_set(const UnitaryMono& delta);

} // namespace monodec

#endif
