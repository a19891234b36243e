#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <symreal/formal_series.hpp>
#include <symreal/poisson.hpp>
#include <symreal/realization.hpp>

namespace symreal
{

/// Iterated Lie derivatives L^n(x^i) along the opposite spray (sign -1),
/// n = 0..max_order.
class FlowIterates
{
public:
    FlowIterates() = default;
    FlowIterates(unsigned dim, std::vector<std::vector<PhasePoly>> table);

    [[nodiscard]] unsigned dimension() const { return dim_; }
    [[nodiscard]] unsigned max_order() const { return static_cast<unsigned>(table_.size()) - 1; }
    [[nodiscard]] const PhasePoly &at(unsigned n, unsigned i) const { return table_.at(n).at(i); }

private:
    unsigned dim_ = 0;
    std::vector<std::vector<PhasePoly>> table_;
};

FlowIterates lie_iterates(const PoissonStructure &pi, unsigned order);

/// phi^i = sum_n epsilon^n / (n+1)! L^n(x^i), truncated at `order`.
FormalSeries phi_series(const PoissonStructure &pi, unsigned order);

/// Solves phi(alpha(x,p), p) = x order by order:
///
///   alpha_(N)^i = -L^N(x^i) / (N+1)!
///                 - sum_{n=1}^{N-1} sum_{m=1}^{N-n} sum_{r_1+..+r_m = N-n, r_l >= 1}
///                     1/((n+1)! m!) alpha_(r_1)^{i_1} .. alpha_(r_m)^{i_m}
///                     d^m L^n(x^i) / dx^{i_1} .. dx^{i_m}
///
/// with the (r_l) ordered and i_1..i_m summed over all components.
RealizationSeries karasev_series(const PoissonStructure &pi, unsigned order);

/// Keyed by (order, component).
using H1Residuals = std::map<std::pair<unsigned, unsigned>, PhasePoly>;

/// phi(alpha(x,p), p) - x through `order`, composed with series_compose.
H1Residuals verify_h1(const PoissonStructure &pi, const RealizationSeries &alpha, unsigned order);
/// Same, with alpha = karasev_series(pi, order).
H1Residuals verify_h1(const PoissonStructure &pi, unsigned order);

struct ComparisonResult {
    bool equal = true;
    /// Lowest (order, component) where the series differ; value is a - b.
    std::optional<SeriesWitness> first_difference;
};

/// Exact coefficientwise comparison through `order`. Throws
/// std::invalid_argument on dimension mismatch or insufficient order.
ComparisonResult compare_series(const RealizationSeries &a, const RealizationSeries &b, unsigned order);

} // namespace symreal
