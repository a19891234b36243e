#pragma once

#include <vector>

#include <symreal/phase_poly.hpp>

namespace symreal
{

/// A scalar formal series in epsilon, truncated: entry n is the coefficient
/// of epsilon^n.
using ScalarSeries = std::vector<PhasePoly>;

/// Vector-valued truncated series in epsilon: coefficient(n, i) is the
/// epsilon^n part of component i. Orders 0..max_order are stored.
class FormalSeries
{
public:
    FormalSeries() = default;
    /// All coefficients zero.
    FormalSeries(unsigned dim, unsigned max_order);

    /// Order 0 is (x^1, ..., x^d), higher orders zero.
    static FormalSeries identity(unsigned dim, unsigned max_order);

    [[nodiscard]] unsigned dimension() const { return dim_; }
    [[nodiscard]] unsigned max_order() const { return max_order_; }

    [[nodiscard]] const PhasePoly &coefficient(unsigned order, unsigned component) const;
    PhasePoly &coefficient(unsigned order, unsigned component);
    void set(unsigned order, unsigned component, PhasePoly value);

    /// The scalar series of one component.
    [[nodiscard]] ScalarSeries component(unsigned i) const;

    /// True iff order 0 is exactly the coordinate vector x.
    [[nodiscard]] bool has_identity_base() const;

    /// Keeps orders 0..order.
    [[nodiscard]] FormalSeries truncated(unsigned order) const;
    [[nodiscard]] FormalSeries flip_momenta() const;

    friend bool operator==(const FormalSeries &, const FormalSeries &) = default;

private:
    unsigned dim_ = 0;
    unsigned max_order_ = 0;
    std::vector<std::vector<PhasePoly>> coeffs_;
};

/// Product of two scalar series keeping orders 0..order.
ScalarSeries series_mul(const ScalarSeries &a, const ScalarSeries &b, unsigned order);

/// f(s(x,p), p) expanded in epsilon through the given order, where only the
/// x-arguments of f are replaced by the components of s and p is held fixed.
/// Requires s to reduce to the identity at order 0. Exact.
ScalarSeries series_compose(const PhasePoly &f, const FormalSeries &s, unsigned order);

} // namespace symreal
