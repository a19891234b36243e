#include <ostream>
#include <stdexcept>
#include <utility>

#include <symreal/rational.hpp>

namespace symreal
{

Rational::Rational(long num, long den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q))
{
    if (sgn(value_.get_den()) == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_.canonicalize();
}

namespace
{

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!is_integer_literal(s)) {
        throw std::invalid_argument("Rational: malformed integer '" + std::string(s) + "'");
    }
    if (s[0] == '+') {
        s.remove_prefix(1);
    }
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const auto num = parse_integer(text.substr(0, slash));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw std::invalid_argument("Rational: denominator must be unsigned in '" + std::string(text) + "'");
    }
    const auto den = parse_integer(den_text);
    if (sgn(den) == 0) {
        throw std::domain_error("Rational: zero denominator in '" + std::string(text) + "'");
    }
    return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_pretty() const
{
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return to_string();
}

Rational &Rational::operator+=(const Rational &o)
{
    value_ += o.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
    value_ -= o.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
    value_ *= o.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational operator-(const Rational &a)
{
    Rational r;
    r.value_ = -a.value_;
    return r;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.to_pretty();
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

} // namespace symreal
