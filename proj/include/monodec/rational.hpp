#ifndef MONODEC_RATIONAL_HPP
#define MONODEC_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace monodec {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
///
/// Thin value wrapper over GMP's mpq_class. Division by zero is reported
/// with DivisionByZero rather than GMP's SIGFPE.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t value);  // NOLINT(google-explicit-constructor)
    explicit Rat(const BigInt& value);
    Rat(const BigInt& num, const BigInt& den);
    Rat(std::int64_t num, std::int64_t den);

    /// Parses "n" or "n/d" (optional leading '-').
    static Rat parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rat inverse() const;
    Rat pow(unsigned exponent) const;

    Rat& operator+=(const Rat& rhs);
    Rat& operator-=(const Rat& rhs);
    Rat& operator*=(const Rat& rhs);
    Rat& operator/=(const Rat& rhs);

    friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
    friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
    friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }
    Rat operator-() const;

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.value_ < b.value_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.value_ > b.value_; }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;
    /// Always "n/d", including "n/1" for integers. Used by the JSON output.
    std::string to_fraction_string() const;

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

} // namespace monodec

#endif
