#include "monodec/irreducibility.hpp"

#include <algorithm>

#include "monodec/errors.hpp"

namespace monodec {

PPoly PPoly::from_poly(UniPoly p)
{
    if (!p.coeff(0).is_one())
        throw ValidationError("not in P: constant term must be 1");
    if (p.is_constant())
        throw ValidationError("not in P: degree must be at least 1");
    return PPoly(std::move(p));
}

UnitaryMono lift_to_mono(const PPoly& p)
{
    return UnitaryMono::from_poly(integral(p.poly()));
}

namespace {

Witness chain_rule_witness(const PPoly& p, const PeelResult& split)
{
    const UniPoly& g = split.sigma.poly();
    const UniPoly& f = split.tau.poly();
    Witness w{poly_compose(derivative(f), g), derivative(g)};
    if (w.u * w.v != p.poly())
        throw InternalError("chain-rule witness does not multiply back to p");
    return w;
}

} // namespace

std::vector<Witness> reducibility_witness(const PPoly& p)
{
    std::vector<Witness> out;
    for (const auto& shape : is_decomposable(lift_to_mono(p)))
        out.push_back(chain_rule_witness(p, shape.result));
    return out;
}

const char* to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::reducible:
        return "reducible (witness found)";
    case Verdict::necessary_conditions_hold:
        return "necessary conditions for irreducibility hold";
    }
    return "unknown";
}

IrredReport irreducibility_report(const PPoly& p)
{
    IrredReport report{p, lift_to_mono(p), {}, {}, Verdict::necessary_conditions_hold};
    const std::size_t d = report.lift.degree();
    for (std::size_t e = 2; e <= d / 2; ++e) {
        if (d % e != 0)
            continue;
        const PeelOutcome outcome = peel(report.lift, e);
        report.shapes.push_back(ShapeResult{e - 1, d / e, outcome.found(), outcome.failure});
        if (!outcome.found())
            continue;
        Witness w = chain_rule_witness(p, *outcome.result);
        if (std::find(report.witnesses.begin(), report.witnesses.end(), w) == report.witnesses.end())
            report.witnesses.push_back(std::move(w));
    }
    if (!report.witnesses.empty())
        report.verdict = Verdict::reducible;
    return report;
}

} // namespace monodec
