#include "monodec/rational.hpp"

#include <ostream>

#include "monodec/errors.hpp"

namespace monodec {

namespace {

bool is_decimal_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '-')
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

Rat::Rat(std::int64_t value) : value_(static_cast<long>(value)) {}

Rat::Rat(const BigInt& value) : value_(value) {}

Rat::Rat(const BigInt& num, const BigInt& den)
{
    if (sgn(den) == 0)
        throw DivisionByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rat::Rat(std::int64_t num, std::int64_t den)
    : Rat(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)))
{
}

Rat Rat::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_decimal_integer(num_text))
        throw ValidationError("malformed rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rat(BigInt(std::string(num_text)));
    const auto den_text = text.substr(slash + 1);
    if (!is_decimal_integer(den_text) || den_text.front() == '-')
        throw ValidationError("malformed rational '" + std::string(text) + "'");
    return Rat(BigInt(std::string(num_text)), BigInt(std::string(den_text)));
}

Rat Rat::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    Rat out;
    mpq_inv(out.value_.get_mpq_t(), value_.get_mpq_t());
    return out;
}

Rat Rat::pow(unsigned exponent) const
{
    Rat out;
    mpz_pow_ui(out.value_.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.value_.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
    return out;
}

Rat& Rat::operator+=(const Rat& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rat& Rat::operator-=(const Rat& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rat& Rat::operator*=(const Rat& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rat& Rat::operator/=(const Rat& rhs)
{
    if (rhs.is_zero())
        throw DivisionByZero();
    value_ /= rhs.value_;
    return *this;
}

Rat Rat::operator-() const
{
    Rat out(*this);
    mpq_neg(out.value_.get_mpq_t(), value_.get_mpq_t());
    return out;
}

std::string Rat::to_string() const
{
    return value_.get_str();
}

std::string Rat::to_fraction_string() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r)
{
    return os << r.to_string();
}

BigInt factorial(unsigned n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace monodec
