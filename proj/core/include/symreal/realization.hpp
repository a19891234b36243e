#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <symreal/formal_series.hpp>
#include <symreal/poisson.hpp>
#include <symreal/rational.hpp>

namespace symreal
{

enum class SeriesKind { source, target, karasev };

std::string_view to_string(SeriesKind kind);
/// Throws std::invalid_argument for anything but source/target/karasev.
SeriesKind series_kind_from_string(std::string_view text);

/// A realization-type series: order 0 is x, order n is p-homogeneous of
/// degree n.
struct RealizationSeries {
    FormalSeries series;
    SeriesKind kind = SeriesKind::source;

    friend bool operator==(const RealizationSeries &, const RealizationSeries &) = default;
};

/// Source map as a sum over rooted trees: order n collects
/// (W_t / sym(t)) D_t^i X over trees of degree n, X the spray with sign +1.
/// memo_limit bounds the elementary-differential cache.
RealizationSeries source_series(const PoissonStructure &pi, unsigned order,
                                std::size_t memo_limit = std::numeric_limits<std::size_t>::max());
/// Same expansion with an extra (-1)^|t| per tree.
RealizationSeries target_series(const PoissonStructure &pi, unsigned order,
                                std::size_t memo_limit = std::numeric_limits<std::size_t>::max());

/// {f, g} = sum_i (d_{x^i} f d_{p_i} g - d_{p_i} f d_{x^i} g).
PhasePoly canonical_bracket(const PhasePoly &f, const PhasePoly &g);

struct ResidualKey {
    unsigned order;
    unsigned i;
    unsigned j;

    friend auto operator<=>(const ResidualKey &, const ResidualKey &) = default;
};

/// Ordered by (order, i, j).
using ResidualMap = std::map<ResidualKey, PhasePoly>;

/// For every i < j and 1 <= n <= order: the epsilon^n part of {r^i, r^j}
/// minus sign * [epsilon^{n-1}] pi^{ij}(r), where sign is -1 for target maps
/// (which are anti-Poisson) and +1 otherwise. Zero everywhere for a
/// realization. Throws if order exceeds the stored series order.
ResidualMap realization_residual(const RealizationSeries &r, const PoissonStructure &pi, unsigned order);

/// First nonzero entry in (order, i, j) order.
std::optional<std::pair<ResidualKey, PhasePoly>> first_nonzero(const ResidualMap &residuals);

/// B_0..B_n from sum_{k=0}^{m} C(m+1, k) B_k = 0, B_0 = 1 (so B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(unsigned n);

/// Linear Poisson structures only: order n is (-1)^n B_n / n! ad_p^n(x^i)
/// with ad_p realised as the Lie derivative along the spray. Throws
/// std::invalid_argument when pi is not linear.
RealizationSeries linear_closed_form(const PoissonStructure &pi, unsigned order);

struct SeriesWitness {
    unsigned order;
    /// Component index, or the dimension for a scalar (pairing) witness.
    unsigned component;
    PhasePoly value;
};

/// First coefficient of order n in 1..order that is not p-homogeneous of degree n.
std::optional<SeriesWitness> check_homogeneity(const FormalSeries &s, unsigned order);
/// First order n in 1..order with sum_i s_(n)^i p_i != 0.
std::optional<SeriesWitness> check_pairing(const FormalSeries &s, unsigned order);

} // namespace symreal
