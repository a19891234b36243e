#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include <symreal/formal_series.hpp>

namespace symreal
{

FormalSeries::FormalSeries(unsigned dim, unsigned max_order)
    : dim_(dim), max_order_(max_order), coeffs_(max_order + 1, std::vector<PhasePoly>(dim, PhasePoly(dim)))
{
}

FormalSeries FormalSeries::identity(unsigned dim, unsigned max_order)
{
    FormalSeries s(dim, max_order);
    for (unsigned i = 0; i < dim; ++i) {
        s.coeffs_[0][i] = PhasePoly::x(dim, i);
    }
    return s;
}

const PhasePoly &FormalSeries::coefficient(unsigned order, unsigned component) const
{
    return coeffs_.at(order).at(component);
}

PhasePoly &FormalSeries::coefficient(unsigned order, unsigned component)
{
    return coeffs_.at(order).at(component);
}

void FormalSeries::set(unsigned order, unsigned component, PhasePoly value)
{
    if (!value.is_zero() && value.dimension() != dim_) {
        throw std::invalid_argument("FormalSeries: coefficient dimension mismatch");
    }
    if (value.is_zero()) {
        value = PhasePoly(dim_);
    }
    coeffs_.at(order).at(component) = std::move(value);
}

ScalarSeries FormalSeries::component(unsigned i) const
{
    ScalarSeries out;
    out.reserve(max_order_ + 1);
    for (unsigned n = 0; n <= max_order_; ++n) {
        out.push_back(coeffs_[n].at(i));
    }
    return out;
}

bool FormalSeries::has_identity_base() const
{
    if (coeffs_.empty()) {
        return false;
    }
    for (unsigned i = 0; i < dim_; ++i) {
        if (coeffs_[0][i] != PhasePoly::x(dim_, i)) {
            return false;
        }
    }
    return true;
}

FormalSeries FormalSeries::truncated(unsigned order) const
{
    if (order > max_order_) {
        throw std::out_of_range("FormalSeries::truncated: order exceeds stored order");
    }
    FormalSeries r = *this;
    r.max_order_ = order;
    r.coeffs_.resize(order + 1);
    return r;
}

FormalSeries FormalSeries::flip_momenta() const
{
    FormalSeries r = *this;
    for (auto &row : r.coeffs_) {
        for (auto &c : row) {
            c = c.flip_momenta();
        }
    }
    return r;
}

ScalarSeries series_mul(const ScalarSeries &a, const ScalarSeries &b, unsigned order)
{
    ScalarSeries out(order + 1);
    for (unsigned i = 0; i <= order && i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (unsigned j = 0; i + j <= order && j < b.size(); ++j) {
            if (!b[j].is_zero()) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
    return out;
}

ScalarSeries series_compose(const PhasePoly &f, const FormalSeries &s, unsigned order)
{
    const unsigned dim = s.dimension();
    if (!f.is_zero() && f.dimension() != dim) {
        throw std::invalid_argument("series_compose: dimension mismatch");
    }
    if (!s.has_identity_base()) {
        throw std::invalid_argument("series_compose: order-0 coefficient of the series is not the identity");
    }
    const unsigned kept = std::min(order, s.max_order());

    // powers[(k, e)] = (s^k)^e truncated at `order`.
    std::map<std::pair<unsigned, unsigned>, ScalarSeries> powers;
    auto power = [&](unsigned k, unsigned e) -> const ScalarSeries & {
        auto it = powers.find({k, e});
        if (it != powers.end()) {
            return it->second;
        }
        ScalarSeries base(order + 1, PhasePoly(dim));
        for (unsigned n = 0; n <= kept; ++n) {
            base[n] = s.coefficient(n, k);
        }
        ScalarSeries acc = base;
        for (unsigned j = 1; j < e; ++j) {
            acc = series_mul(acc, base, order);
        }
        return powers.emplace(std::pair{k, e}, std::move(acc)).first->second;
    };

    ScalarSeries out(order + 1, PhasePoly(dim));
    for (const auto &[exps, c] : f.terms()) {
        Exponents p_part(2 * dim, 0);
        for (unsigned k = dim; k < 2 * dim; ++k) {
            p_part[k] = exps[k];
        }
        ScalarSeries term(order + 1, PhasePoly(dim));
        term[0] = PhasePoly::monomial(dim, p_part, c);
        for (unsigned k = 0; k < dim; ++k) {
            if (exps[k] != 0) {
                term = series_mul(term, power(k, exps[k]), order);
            }
        }
        for (unsigned n = 0; n <= order; ++n) {
            out[n] += term[n];
        }
    }
    return out;
}

} // namespace symreal
