#include "monodec/polytext.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "monodec/errors.hpp"

namespace monodec {

namespace {

constexpr std::size_t kMaxExponent = 100000;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    UniPoly parse()
    {
        skip_ws();
        if (at_end())
            throw ParseError("expected a term", pos_);
        std::vector<Rat> coeffs;
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        for (;;) {
            skip_ws();
            auto [coeff, exponent] = term();
            if (coeffs.size() <= exponent)
                coeffs.resize(exponent + 1);
            coeffs[exponent] += negate ? -coeff : coeff;
            skip_ws();
            if (at_end())
                break;
            if (peek() != '+' && peek() != '-')
                throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
            negate = peek() == '-';
            ++pos_;
        }
        return UniPoly(std::move(coeffs));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    std::optional<std::string> digits()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ == start)
            return std::nullopt;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::pair<Rat, std::size_t> term()
    {
        Rat coeff(1);
        bool have_coeff = false;
        if (auto num = digits()) {
            have_coeff = true;
            BigInt numerator(*num);
            BigInt denominator(1);
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t den_pos = pos_;
                auto den = digits();
                if (!den)
                    throw ParseError("expected a denominator", pos_);
                denominator = BigInt(*den);
                if (denominator == 0)
                    throw ParseError("zero denominator", den_pos);
            }
            coeff = Rat(numerator, denominator);
            skip_ws();
        }
        bool star = false;
        if (have_coeff && !at_end() && peek() == '*') {
            star = true;
            ++pos_;
            skip_ws();
        }
        if (at_end() || peek() != 'x') {
            if (star)
                throw ParseError("expected 'x' after '*'", pos_);
            if (!have_coeff)
                throw ParseError("expected a term", pos_);
            return {coeff, 0};
        }
        ++pos_;
        skip_ws();
        std::size_t exponent = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t exp_pos = pos_;
            auto e = digits();
            if (!e)
                throw ParseError("expected an exponent", pos_);
            if (e->size() > 6 || std::stoul(*e) > kMaxExponent)
                throw ParseError("exponent too large", exp_pos);
            exponent = std::stoul(*e);
        }
        return {coeff, exponent};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

UniPoly parse_poly(std::string_view text)
{
    return Parser(text).parse();
}

std::string format_poly(const UniPoly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero())
            continue;
        const bool negative = c[k].sign() < 0;
        const Rat mag = negative ? -c[k] : c[k];
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one())
            os << mag << (mag.is_integer() ? "" : "*");
        os << 'x';
        if (k > 1)
            os << '^' << k;
    }
    return os.str();
}

std::vector<std::string> coefficient_strings(const UniPoly& p)
{
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        out.push_back(c.to_fraction_string());
    return out;
}

} // namespace monodec
