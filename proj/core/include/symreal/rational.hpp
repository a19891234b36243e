#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace symreal
{

/// Exact signed rational, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational
{
public:
    Rational() = default;
    Rational(long n) : value_(n) {}
    Rational(int n) : value_(static_cast<long>(n)) {}
    Rational(long num, long den);
    explicit Rational(const mpz_class &n) : value_(n) {}
    explicit Rational(mpq_class q);

    /// Accepts "n", "-n", "n/d" with optional leading sign on the numerator.
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    /// Always "num/den", e.g. "0/1", "-1/720", "3/1".
    [[nodiscard]] std::string to_string() const;
    /// Human-friendly: integers print without denominator.
    [[nodiscard]] std::string to_pretty() const;

    [[nodiscard]] const mpq_class &raw() const { return value_; }

    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a);

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

} // namespace symreal
