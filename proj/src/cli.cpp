#include "monodec/cli.hpp"

#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monodec/decompose.hpp"
#include "monodec/errors.hpp"
#include "monodec/freemonoid.hpp"
#include "monodec/inversion.hpp"
#include "monodec/irreducibility.hpp"
#include "monodec/polytext.hpp"

namespace monodec::cli {

namespace {

using nlohmann::json;

constexpr const char* kLambdaErratum =
    "lambda is computed as m * (c_{d-n}/c_d - S)^{-1}, with S summed over the recovered a_j; "
    "the variant m^{-1} * (c_{d-n}/c_d - S)^{-1} does not satisfy m/lambda + S = c_{d-n}/c_d";
constexpr const char* kLiftErratum =
    "delta_p is the true antiderivative of p with delta_p(0) = 0, so that delta_p' = p "
    "and the chain rule applies to p itself";

std::string format_signature(const std::vector<std::size_t>& sig)
{
    std::string out = "(";
    for (std::size_t i = 0; i < sig.size(); ++i)
        out += (i == 0 ? "" : ",") + std::to_string(sig[i]);
    return out + ")";
}

std::string format_generator(const Generator& g)
{
    return "(" + std::to_string(g.n) + ", " + g.lambda.to_string() + ")";
}

json poly_json(const UniPoly& p)
{
    return json{{"poly", format_poly(p)}, {"coefficients", coefficient_strings(p)}};
}

UnitaryMono parse_unitary(const std::string& text)
{
    return UnitaryMono::from_poly(parse_poly(text));
}

// What every handler produces: the JSON "result" member and the plain text.
struct Report {
    json input;
    json result;
    json errata = json::array();
    std::string text;
};

Report do_compose(const std::vector<std::string>& polys)
{
    Report r;
    r.input = json::array();
    UnitaryMono product = UnitaryMono::identity();
    for (const auto& text : polys) {
        const UnitaryMono factor = parse_unitary(text);
        r.input.push_back(format_poly(factor.poly()));
        product = mono_product(product, factor);
    }
    r.result = poly_json(product.poly());
    r.result["degree"] = product.degree();
    r.text = format_poly(product.poly()) + "\n";
    return r;
}

Report do_decompose(const std::string& text)
{
    const UnitaryMono delta = parse_unitary(text);
    Report r;
    r.input = format_poly(delta.poly());
    json entries = json::array();
    std::ostringstream os;
    for (const auto& dec : enumerate_decompositions(delta)) {
        json factors = json::array();
        os << format_signature(dec.signature) << ":";
        for (const auto& f : dec.factors) {
            factors.push_back(format_poly(f.poly()));
            os << "  [" << format_poly(f.poly()) << "]";
        }
        os << "\n";
        entries.push_back(json{{"signature", dec.signature}, {"factors", factors}});
    }
    r.result = json{{"count", entries.size()}, {"decompositions", entries}};
    r.errata.push_back(kLambdaErratum);
    r.text = os.str();
    return r;
}

Report do_signature(const std::string& text)
{
    const UnitaryMono delta = parse_unitary(text);
    Report r;
    r.input = format_poly(delta.poly());
    const auto sigs = signature_set(delta);
    std::ostringstream os;
    for (const auto& s : sigs)
        os << format_signature(s) << "\n";
    r.result = json{{"signatures", sigs}};
    r.text = os.str();
    return r;
}

Report do_peel(const std::string& text, std::size_t degree)
{
    const UnitaryMono delta = parse_unitary(text);
    Report r;
    r.input = format_poly(delta.poly());
    const PeelOutcome outcome = peel(delta, degree);
    r.errata.push_back(kLambdaErratum);
    if (!outcome.found()) {
        r.result = json{{"found", false}, {"failure", to_string(outcome.failure)}, {"reason", outcome.describe()}};
        if (outcome.failed_index)
            r.result["failed_index"] = *outcome.failed_index;
        r.text = outcome.describe() + "\n";
        return r;
    }
    const PeelResult& res = *outcome.result;
    json a = json::array();
    for (const auto& v : res.ratio.a)
        a.push_back(v.to_fraction_string());
    json mu = json::array();
    for (const auto& v : res.mu)
        mu.push_back(v.to_fraction_string());
    r.result = json{{"found", true},
                    {"sigma", format_poly(res.sigma.poly())},
                    {"tau", format_poly(res.tau.poly())},
                    {"n", res.ratio.n},
                    {"m", res.tau.degree()},
                    {"lambda", res.ratio.lambda.to_fraction_string()},
                    {"a", a},
                    {"mu", mu}};
    r.text = "sigma = " + format_poly(res.sigma.poly()) + "\ntau = " + format_poly(res.tau.poly()) + "\n";
    return r;
}

Report do_free_factor(const std::string& text)
{
    const UnitaryMono f = parse_unitary(text);
    Report r;
    r.input = format_poly(f.poly());
    const WordOutcome outcome = factor_word(f);
    if (!outcome.in_monoid()) {
        r.result = json{{"in_monoid", false}, {"reason", outcome.reason}};
        r.text = outcome.reason + "\n";
        return r;
    }
    json word = json::array();
    std::ostringstream os;
    for (const auto& g : *outcome.word) {
        word.push_back(json{{"n", g.n}, {"lambda", g.lambda.to_fraction_string()},
                            {"generator", format_poly(g.mono().poly())}});
        os << format_generator(g) << "  " << format_poly(g.mono().poly()) << "\n";
    }
    if (outcome.word->empty())
        os << "(empty word)\n";
    r.result = json{{"in_monoid", true}, {"word", word}};
    r.text = os.str();
    return r;
}

Report do_gamma_level(const std::string& text)
{
    const UnitaryMono f = parse_unitary(text);
    Report r;
    r.input = format_poly(f.poly());
    const auto level = gamma_level(f);
    if (level) {
        r.result = json{{"level", *level}};
        r.text = std::to_string(*level) + "\n";
    } else {
        r.result = json{{"level", "unbounded"}};
        r.text = "unbounded\n";
    }
    return r;
}

Report do_irreducible_check(const std::string& text)
{
    const PPoly p = PPoly::from_poly(parse_poly(text));
    Report r;
    r.input = format_poly(p.poly());
    const IrredReport report = irreducibility_report(p);
    json shapes = json::array();
    json witnesses = json::array();
    std::ostringstream os;
    os << "lift: " << format_poly(report.lift.poly()) << "\n";
    for (const auto& s : report.shapes) {
        json entry{{"n", s.n}, {"m", s.m}, {"decomposable", s.decomposable}};
        os << "shape (n=" << s.n << ", m=" << s.m << "): ";
        if (s.decomposable) {
            os << "decomposable\n";
        } else {
            entry["failure"] = to_string(s.failure);
            os << "not decomposable (" << to_string(s.failure) << ")\n";
        }
        shapes.push_back(entry);
    }
    for (const auto& w : report.witnesses) {
        witnesses.push_back(json{{"u", format_poly(w.u)}, {"v", format_poly(w.v)}});
        os << "witness: (" << format_poly(w.u) << ") * (" << format_poly(w.v) << ")\n";
    }
    os << "verdict: " << to_string(report.verdict) << "\n";
    r.result = json{{"lift", format_poly(report.lift.poly())},
                    {"shapes", shapes},
                    {"witnesses", witnesses},
                    {"verdict", to_string(report.verdict)}};
    r.errata.push_back(kLiftErratum);
    r.text = os.str();
    return r;
}

Report do_inverse_table(std::size_t n, unsigned m)
{
    Report r;
    r.input = json{{"n", n}, {"m", m}};
    const auto table = inverse_table(n, m);
    std::vector<std::string> primed;
    for (std::size_t k = 1; k < n; ++k)
        primed.push_back("x" + std::to_string(k) + "'");
    json entries = json::array();
    std::ostringstream os;
    for (std::size_t j = 1; j <= table.size(); ++j) {
        const std::string poly = table[j - 1].to_string(primed);
        entries.push_back(json{{"j", j}, {"poly", poly}});
        os << "x" << j << " = " << poly << "\n";
    }
    r.result = json{{"n", n}, {"m", m}, {"expansions", entries}};
    r.errata.push_back(kLambdaErratum);
    r.text = os.str();
    return r;
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args)
{
    CLI::App app{"Composition factorization of unitary polynomials x + c_2 x^2 + ... + c_d x^d", "monodec"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON instead of text");

    std::vector<std::string> compose_inputs;
    auto* compose = app.add_subcommand("compose", "Monoid product of the inputs (leftmost is innermost)");
    compose->add_option("polys", compose_inputs, "Unitary polynomials")->required();

    std::string poly;
    auto* decompose = app.add_subcommand("decompose", "Every decomposition with its signature");
    decompose->add_option("poly", poly)->required();
    auto* signature = app.add_subcommand("signature", "The set of decomposition signatures");
    signature->add_option("poly", poly)->required();

    std::size_t degree = 0;
    auto* peel_cmd = app.add_subcommand("peel", "Split off the inner factor of a given degree");
    peel_cmd->add_option("poly", poly)->required();
    peel_cmd->add_option("--degree", degree, "Degree of the inner factor")->required();

    auto* free_factor = app.add_subcommand("free-factor", "Generator word in the free monoid of x + lambda x^k");
    free_factor->add_option("poly", poly)->required();
    auto* gamma = app.add_subcommand("gamma-level", "Largest n with f(x) - x supported on x^{1+ni}");
    gamma->add_option("poly", poly)->required();
    auto* irreducible = app.add_subcommand("irreducible-check", "Chain-rule divisors of 1 + l_1 x + ... + l_t x^t");
    irreducible->add_option("poly", poly)->required();

    std::size_t inv_n = 0;
    unsigned inv_m = 0;
    auto* inverse = app.add_subcommand("inverse-table", "x_j as polynomials in x_1', ..., x_j'");
    inverse->add_option("--n", inv_n, "Inner factor degree minus one")->required();
    inverse->add_option("--m", inv_m, "Outer factor degree")->required();

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    CommandResult result;
    std::ostringstream out;
    std::ostringstream err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        result.exit_code = code == 0 ? kSuccess : kInputError;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        Report report;
        if (command == "compose")
            report = do_compose(compose_inputs);
        else if (command == "decompose")
            report = do_decompose(poly);
        else if (command == "signature")
            report = do_signature(poly);
        else if (command == "peel")
            report = do_peel(poly, degree);
        else if (command == "free-factor")
            report = do_free_factor(poly);
        else if (command == "gamma-level")
            report = do_gamma_level(poly);
        else if (command == "irreducible-check")
            report = do_irreducible_check(poly);
        else
            report = do_inverse_table(inv_n, inv_m);

        if (as_json) {
            json doc{{"command", command},
                     {"input", report.input},
                     {"result", report.result},
                     {"errata_notes", report.errata}};
            result.out = doc.dump(2) + "\n";
        } else {
            result.out = report.text;
        }
    } catch (const ValidationError& e) {
        result.exit_code = kInputError;
        result.err = std::string("error: ") + e.what() + "\n";
    } catch (const InternalError& e) {
        result.exit_code = kInternalError;
        result.err = std::string("internal error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        result.exit_code = kInternalError;
        result.err = std::string("internal error: ") + e.what() + "\n";
    }
    return result;
}

} // namespace monodec::cli
