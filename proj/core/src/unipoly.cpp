#include <sstream>
#include <utility>

#include <symreal/unipoly.hpp>

namespace symreal
{

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

UniPoly UniPoly::constant(const Rational &c)
{
    return UniPoly({c});
}

UniPoly UniPoly::theta()
{
    return UniPoly({Rational(0), Rational(1)});
}

void UniPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational UniPoly::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational UniPoly::evaluate(const Rational &theta) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * theta + *it;
    }
    return acc;
}

UniPoly UniPoly::antiderivative() const
{
    if (is_zero()) {
        return {};
    }
    std::vector<Rational> out(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out[k + 1] = coeffs_[k] / Rational(static_cast<long>(k + 1));
    }
    return UniPoly(std::move(out));
}

UniPoly &UniPoly::operator+=(const UniPoly &o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    normalize();
    return *this;
}

UniPoly &UniPoly::operator-=(const UniPoly &o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    normalize();
    return *this;
}

UniPoly &UniPoly::operator*=(const Rational &c)
{
    for (auto &a : coeffs_) {
        a *= c;
    }
    normalize();
    return *this;
}

UniPoly operator*(const UniPoly &a, const UniPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UniPoly(std::move(out));
}

std::string UniPoly::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const auto &c = coeffs_[k];
        if (c.is_zero()) {
            continue;
        }
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
        } else if (c.sign() < 0) {
            os << "-";
        }
        const Rational mag = c.sign() < 0 ? -c : c;
        if (k == 0 || mag != Rational(1)) {
            os << mag;
        }
        if (k >= 1) {
            os << (k == 0 || mag != Rational(1) ? "*" : "") << "theta";
            if (k > 1) {
                os << "^" << k;
            }
        }
        first = false;
    }
    return os.str();
}

UniPoly unipoly_nested_integral(const UniPoly &integrand)
{
    const UniPoly q = integrand.antiderivative();
    const UniPoly r = q.antiderivative();
    return UniPoly::constant(r.evaluate(Rational(1))) - q;
}

} // namespace symreal
