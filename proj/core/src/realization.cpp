#include <algorithm>
#include <stdexcept>
#include <string>

#include <symreal/elem_diff.hpp>
#include <symreal/realization.hpp>
#include <symreal/rooted_tree.hpp>
#include <symreal/weights.hpp>

namespace symreal
{

std::string_view to_string(SeriesKind kind)
{
    switch (kind) {
        case SeriesKind::source:
            return "source";
        case SeriesKind::target:
            return "target";
        case SeriesKind::karasev:
            return "karasev";
    }
    return "unknown";
}

SeriesKind series_kind_from_string(std::string_view text)
{
    if (text == "source") {
        return SeriesKind::source;
    }
    if (text == "target") {
        return SeriesKind::target;
    }
    if (text == "karasev") {
        return SeriesKind::karasev;
    }
    throw std::invalid_argument("unknown series kind '" + std::string(text) + "'");
}

namespace
{

RealizationSeries tree_expansion(const PoissonStructure &pi, unsigned order, bool alternate, std::size_t memo_limit)
{
    if (order == 0) {
        throw std::invalid_argument("realization series: order must be at least 1");
    }
    const unsigned d = pi.dimension();
    const ElementaryDifferentials diffs(spray(pi, +1), memo_limit);
    FormalSeries s = FormalSeries::identity(d, order);
    for (const auto &t : enumerate_trees(order)) {
        Rational coeff = weight(t) / Rational(static_cast<long>(symmetry_order(t)));
        if (coeff.is_zero()) {
            continue;
        }
        if (alternate && t.degree() % 2 == 1) {
            coeff = -coeff;
        }
        for (unsigned i = 0; i < d; ++i) {
            s.coefficient(t.degree(), i) += diffs(t, i) * coeff;
        }
    }
    return {std::move(s), alternate ? SeriesKind::target : SeriesKind::source};
}

} // namespace

RealizationSeries source_series(const PoissonStructure &pi, unsigned order, std::size_t memo_limit)
{
    return tree_expansion(pi, order, false, memo_limit);
}

RealizationSeries target_series(const PoissonStructure &pi, unsigned order, std::size_t memo_limit)
{
    return tree_expansion(pi, order, true, memo_limit);
}

PhasePoly canonical_bracket(const PhasePoly &f, const PhasePoly &g)
{
    if (f.dimension() != 0 && g.dimension() != 0 && f.dimension() != g.dimension()) {
        throw std::invalid_argument("canonical_bracket: dimension mismatch");
    }
    const unsigned d = std::max({f.dimension(), g.dimension(), 1u});
    if (f.is_zero() || g.is_zero()) {
        return PhasePoly(d);
    }
    PhasePoly acc(d);
    for (unsigned i = 0; i < d; ++i) {
        acc += f.partial(Var::x(i)) * g.partial(Var::p(i));
        acc -= f.partial(Var::p(i)) * g.partial(Var::x(i));
    }
    return acc;
}

ResidualMap realization_residual(const RealizationSeries &r, const PoissonStructure &pi, unsigned order)
{
    const FormalSeries &s = r.series;
    if (order > s.max_order()) {
        throw std::invalid_argument("realization_residual: requested order " + std::to_string(order)
                                    + " exceeds series order " + std::to_string(s.max_order()));
    }
    if (s.dimension() != pi.dimension()) {
        throw std::invalid_argument("realization_residual: dimension mismatch");
    }
    const unsigned d = s.dimension();
    const Rational sign(r.kind == SeriesKind::target ? -1 : 1);
    ResidualMap out;
    for (unsigned i = 0; i < d; ++i) {
        for (unsigned j = i + 1; j < d; ++j) {
            const ScalarSeries composed = series_compose(pi.entry(i, j), s, order == 0 ? 0 : order - 1);
            for (unsigned n = 1; n <= order; ++n) {
                PhasePoly res(d);
                for (unsigned a = 0; a <= n; ++a) {
                    res += canonical_bracket(s.coefficient(a, i), s.coefficient(n - a, j));
                }
                res -= composed[n - 1] * sign;
                out.emplace(ResidualKey{n, i, j}, std::move(res));
            }
        }
    }
    return out;
}

std::optional<std::pair<ResidualKey, PhasePoly>> first_nonzero(const ResidualMap &residuals)
{
    for (const auto &[k, v] : residuals) {
        if (!v.is_zero()) {
            return std::pair{k, v};
        }
    }
    return std::nullopt;
}

std::vector<Rational> bernoulli_numbers(unsigned n)
{
    std::vector<Rational> b{Rational(1)};
    for (unsigned m = 1; m <= n; ++m) {
        Rational acc;
        for (unsigned k = 0; k < m; ++k) {
            acc += binomial(m + 1, k) * b[k];
        }
        b.push_back(-acc / Rational(static_cast<long>(m + 1)));
    }
    return b;
}

RealizationSeries linear_closed_form(const PoissonStructure &pi, unsigned order)
{
    if (!pi.is_linear()) {
        throw std::invalid_argument("linear_closed_form: Poisson structure is not linear");
    }
    if (order == 0) {
        throw std::invalid_argument("linear_closed_form: order must be at least 1");
    }
    const unsigned d = pi.dimension();
    const SprayField v = spray(pi, +1);
    const auto bern = bernoulli_numbers(order);
    FormalSeries s = FormalSeries::identity(d, order);
    for (unsigned i = 0; i < d; ++i) {
        PhasePoly ad = PhasePoly::x(d, i);
        for (unsigned n = 1; n <= order; ++n) {
            ad = lie_derivative(v, ad);
            Rational c = bern[n] / factorial(n);
            if (n % 2 == 1) {
                c = -c;
            }
            s.set(n, i, ad * c);
        }
    }
    return {std::move(s), SeriesKind::source};
}

std::optional<SeriesWitness> check_homogeneity(const FormalSeries &s, unsigned order)
{
    for (unsigned n = 1; n <= order && n <= s.max_order(); ++n) {
        for (unsigned i = 0; i < s.dimension(); ++i) {
            if (!s.coefficient(n, i).is_p_homogeneous(n)) {
                return SeriesWitness{n, i, s.coefficient(n, i)};
            }
        }
    }
    return std::nullopt;
}

std::optional<SeriesWitness> check_pairing(const FormalSeries &s, unsigned order)
{
    const unsigned d = s.dimension();
    for (unsigned n = 1; n <= order && n <= s.max_order(); ++n) {
        PhasePoly acc(d);
        for (unsigned i = 0; i < d; ++i) {
            acc += s.coefficient(n, i) * PhasePoly::p(d, i);
        }
        if (!acc.is_zero()) {
            return SeriesWitness{n, d, std::move(acc)};
        }
    }
    return std::nullopt;
}

} // namespace symreal
