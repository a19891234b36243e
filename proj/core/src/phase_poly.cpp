#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <symreal/phase_poly.hpp>

namespace symreal
{

PhasePoly::PhasePoly(unsigned dim) : dim_(dim)
{
    if (dim == 0) {
        throw std::invalid_argument("PhasePoly: dimension must be positive");
    }
}

PhasePoly PhasePoly::constant(unsigned dim, const Rational &c)
{
    PhasePoly r(dim);
    r.add_term(Exponents(2 * dim, 0), c);
    return r;
}

PhasePoly PhasePoly::variable(unsigned dim, Var v)
{
    if (v.index >= dim) {
        throw std::out_of_range("PhasePoly: variable index out of range");
    }
    PhasePoly r(dim);
    Exponents e(2 * dim, 0);
    e[v.slot(dim)] = 1;
    r.add_term(e, Rational(1));
    return r;
}

PhasePoly PhasePoly::monomial(unsigned dim, Exponents exps, const Rational &c)
{
    PhasePoly r(dim);
    if (exps.size() != 2 * dim) {
        throw std::invalid_argument("PhasePoly: exponent vector must have length 2*dimension");
    }
    r.add_term(exps, c);
    return r;
}

void PhasePoly::require_same_dim(const PhasePoly &o) const
{
    if (dim_ != o.dim_) {
        throw std::invalid_argument("PhasePoly: dimension mismatch (" + std::to_string(dim_) + " vs "
                                    + std::to_string(o.dim_) + ")");
    }
}

void PhasePoly::add_term(const Exponents &exps, const Rational &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

PhasePoly PhasePoly::partial(Var v) const
{
    if (v.index >= dim_) {
        throw std::out_of_range("PhasePoly::partial: unknown variable");
    }
    const unsigned s = v.slot(dim_);
    PhasePoly r(dim_);
    for (const auto &[e, c] : terms_) {
        if (e[s] == 0) {
            continue;
        }
        Exponents d = e;
        --d[s];
        r.terms_.emplace_hint(r.terms_.end(), std::move(d), c * Rational(static_cast<long>(e[s])));
    }
    return r;
}

bool PhasePoly::depends_only_on_x() const
{
    return std::all_of(terms_.begin(), terms_.end(), [this](const auto &t) {
        return std::all_of(t.first.begin() + dim_, t.first.end(), [](auto k) { return k == 0; });
    });
}

bool PhasePoly::is_p_homogeneous(unsigned n) const
{
    return std::all_of(terms_.begin(), terms_.end(), [this, n](const auto &t) {
        return std::accumulate(t.first.begin() + dim_, t.first.end(), 0u) == n;
    });
}

int PhasePoly::max_x_degree() const
{
    int best = -1;
    for (const auto &[e, c] : terms_) {
        best = std::max(best, static_cast<int>(std::accumulate(e.begin(), e.begin() + dim_, 0u)));
    }
    return best;
}

int PhasePoly::min_x_degree() const
{
    if (terms_.empty()) {
        return -1;
    }
    int best = -1;
    for (const auto &[e, c] : terms_) {
        const int deg = static_cast<int>(std::accumulate(e.begin(), e.begin() + dim_, 0u));
        best = best < 0 ? deg : std::min(best, deg);
    }
    return best;
}

PhasePoly PhasePoly::flip_momenta() const
{
    PhasePoly r = *this;
    for (auto &[e, c] : r.terms_) {
        if (std::accumulate(e.begin() + dim_, e.end(), 0u) % 2 == 1) {
            c = -c;
        }
    }
    return r;
}

Rational PhasePoly::evaluate(std::span<const Rational> point) const
{
    if (point.size() != 2 * dim_) {
        throw std::invalid_argument("PhasePoly::evaluate: point must have 2*dimension entries");
    }
    Rational acc;
    for (const auto &[e, c] : terms_) {
        Rational m = c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            for (std::uint32_t j = 0; j < e[k]; ++j) {
                m *= point[k];
            }
        }
        acc += m;
    }
    return acc;
}

PhasePoly &PhasePoly::operator+=(const PhasePoly &o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (dim_ == 0) {
        return *this = o;
    }
    require_same_dim(o);
    for (const auto &[e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

PhasePoly &PhasePoly::operator-=(const PhasePoly &o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (dim_ == 0) {
        return *this = -o;
    }
    require_same_dim(o);
    for (const auto &[e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

PhasePoly &PhasePoly::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, v] : terms_) {
        v *= c;
    }
    return *this;
}

PhasePoly &PhasePoly::operator*=(const PhasePoly &o)
{
    *this = *this * o;
    return *this;
}

PhasePoly operator*(const PhasePoly &a, const PhasePoly &b)
{
    if (a.dim_ != 0 && b.dim_ != 0) {
        a.require_same_dim(b);
    }
    PhasePoly r;
    r.dim_ = a.dim_ != 0 ? a.dim_ : b.dim_;
    if (a.is_zero() || b.is_zero()) {
        return r;
    }
    Exponents e(2 * r.dim_);
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) {
                e[k] = ea[k] + eb[k];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

PhasePoly operator-(PhasePoly a)
{
    for (auto &[e, c] : a.terms_) {
        c = -c;
    }
    return a;
}

bool operator==(const PhasePoly &a, const PhasePoly &b)
{
    if (a.is_zero() && b.is_zero()) {
        return true;
    }
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

std::string PhasePoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    // Highest monomials first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[e, c] = *it;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (mag != Rational(1)) {
            os << mag;
            wrote = true;
        }
        for (unsigned k = 0; k < 2 * dim_; ++k) {
            if (e[k] == 0) {
                continue;
            }
            if (wrote) {
                os << "*";
            }
            os << (k < dim_ ? "x" : "p") << (k < dim_ ? k + 1 : k - dim_ + 1);
            if (e[k] > 1) {
                os << "^" << e[k];
            }
            wrote = true;
        }
        if (!wrote) {
            os << "1";
        }
    }
    return os.str();
}

PhasePoly multipoly_mul(const PhasePoly &a, const PhasePoly &b)
{
    return a * b;
}

PhasePoly multipoly_partial(const PhasePoly &a, Var v)
{
    return a.partial(v);
}

} // namespace symreal
