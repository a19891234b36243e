#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <symreal/rational.hpp>

namespace symreal
{

/// Dense univariate polynomial in the angle variable theta. Coefficients are
/// indexed by degree; the highest stored coefficient is never zero.
class UniPoly
{
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational &c);
    /// theta^1
    static UniPoly theta();

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<Rational> &coefficients() const { return coeffs_; }
    /// Coefficient of theta^k, zero past the degree.
    [[nodiscard]] Rational coeff(std::size_t k) const;

    [[nodiscard]] Rational evaluate(const Rational &theta) const;
    /// Antiderivative vanishing at theta = 0.
    [[nodiscard]] UniPoly antiderivative() const;

    UniPoly &operator+=(const UniPoly &o);
    UniPoly &operator-=(const UniPoly &o);
    UniPoly &operator*=(const Rational &c);

    friend UniPoly operator+(UniPoly a, const UniPoly &b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly &b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rational &c) { return a *= c; }
    friend UniPoly operator*(const UniPoly &a, const UniPoly &b);
    friend bool operator==(const UniPoly &, const UniPoly &) = default;

    [[nodiscard]] std::string to_string() const;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

/// Closed form of  int_0^1 dl int_theta^l p(u) du  as a polynomial in theta:
/// with Q' = p, Q(0) = 0 and R' = Q, R(0) = 0 the result is R(1) - Q(theta).
UniPoly unipoly_nested_integral(const UniPoly &integrand);

} // namespace symreal
