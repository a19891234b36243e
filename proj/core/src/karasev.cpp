#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include <symreal/karasev.hpp>

namespace symreal
{

FlowIterates::FlowIterates(unsigned dim, std::vector<std::vector<PhasePoly>> table)
    : dim_(dim), table_(std::move(table))
{
}

FlowIterates lie_iterates(const PoissonStructure &pi, unsigned order)
{
    const unsigned d = pi.dimension();
    const SprayField vbar = spray(pi, -1);
    std::vector<std::vector<PhasePoly>> table(order + 1);
    for (unsigned i = 0; i < d; ++i) {
        table[0].push_back(PhasePoly::x(d, i));
    }
    for (unsigned n = 1; n <= order; ++n) {
        for (unsigned i = 0; i < d; ++i) {
            table[n].push_back(lie_derivative(vbar, table[n - 1][i]));
        }
    }
    return FlowIterates(d, std::move(table));
}

FormalSeries phi_series(const PoissonStructure &pi, unsigned order)
{
    const auto iter = lie_iterates(pi, order);
    const unsigned d = pi.dimension();
    FormalSeries s(d, order);
    for (unsigned n = 0; n <= order; ++n) {
        const Rational c = Rational(1) / factorial(n + 1);
        for (unsigned i = 0; i < d; ++i) {
            s.set(n, i, iter.at(n, i) * c);
        }
    }
    return s;
}

namespace
{

/// Mixed x-partials of L^n(x^i), cached by sorted index tuple.
class IterateDerivatives
{
public:
    explicit IterateDerivatives(const FlowIterates &iter) : iter_(iter) {}

    const PhasePoly &get(unsigned n, unsigned i, std::vector<unsigned> idx)
    {
        std::sort(idx.begin(), idx.end());
        Key key{n, i, idx};
        if (auto it = cache_.find(key); it != cache_.end()) {
            return it->second;
        }
        PhasePoly v;
        if (idx.empty()) {
            v = iter_.at(n, i);
        } else {
            auto shorter = idx;
            const unsigned last = shorter.back();
            shorter.pop_back();
            v = get(n, i, shorter).partial(Var::x(last));
        }
        return cache_.emplace(std::move(key), std::move(v)).first->second;
    }

private:
    using Key = std::tuple<unsigned, unsigned, std::vector<unsigned>>;

    const FlowIterates &iter_;
    std::map<Key, PhasePoly> cache_;
};

/// Calls f(parts) for each ordered composition of `total` into `parts.size()` positive parts.
void for_each_composition(unsigned total, unsigned count, const std::function<void(const std::vector<unsigned> &)> &f)
{
    std::vector<unsigned> parts(count);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned left) {
        if (pos + 1 == count) {
            parts[pos] = left;
            f(parts);
            return;
        }
        for (unsigned r = 1; r + (count - pos - 1) <= left; ++r) {
            parts[pos] = r;
            rec(pos + 1, left - r);
        }
    };
    if (count > 0 && total >= count) {
        rec(0, total);
    }
}

} // namespace

RealizationSeries karasev_series(const PoissonStructure &pi, unsigned order)
{
    if (order == 0) {
        throw std::invalid_argument("karasev_series: order must be at least 1");
    }
    const unsigned d = pi.dimension();
    const auto iter = lie_iterates(pi, order);
    IterateDerivatives derivs(iter);
    FormalSeries alpha = FormalSeries::identity(d, order);

    for (unsigned big_n = 1; big_n <= order; ++big_n) {
        for (unsigned i = 0; i < d; ++i) {
            PhasePoly value = iter.at(big_n, i) * (Rational(-1) / factorial(big_n + 1));
            for (unsigned n = 1; n + 1 <= big_n; ++n) {
                for (unsigned m = 1; m <= big_n - n; ++m) {
                    const Rational weight = Rational(1) / (factorial(n + 1) * factorial(m));
                    for_each_composition(big_n - n, m, [&](const std::vector<unsigned> &r) {
                        std::vector<unsigned> idx(m, 0);
                        while (true) {
                            PhasePoly term = derivs.get(n, i, idx);
                            for (unsigned l = 0; l < m && !term.is_zero(); ++l) {
                                term = term * alpha.coefficient(r[l], idx[l]);
                            }
                            if (!term.is_zero()) {
                                value -= term * weight;
                            }
                            unsigned pos = 0;
                            while (pos < m && ++idx[pos] == d) {
                                idx[pos++] = 0;
                            }
                            if (pos == m) {
                                break;
                            }
                        }
                    });
                }
            }
            alpha.set(big_n, i, std::move(value));
        }
    }
    return {std::move(alpha), SeriesKind::karasev};
}

H1Residuals verify_h1(const PoissonStructure &pi, const RealizationSeries &alpha, unsigned order)
{
    if (order > alpha.series.max_order()) {
        throw std::invalid_argument("verify_h1: order exceeds series order");
    }
    const unsigned d = pi.dimension();
    const auto iter = lie_iterates(pi, order);
    H1Residuals out;
    for (unsigned i = 0; i < d; ++i) {
        ScalarSeries total(order + 1, PhasePoly(d));
        for (unsigned n = 0; n <= order; ++n) {
            const ScalarSeries composed = series_compose(iter.at(n, i), alpha.series, order - n);
            const Rational c = Rational(1) / factorial(n + 1);
            for (unsigned k = 0; k + n <= order; ++k) {
                total[k + n] += composed[k] * c;
            }
        }
        total[0] -= PhasePoly::x(d, i);
        for (unsigned k = 0; k <= order; ++k) {
            out.emplace(std::pair{k, i}, std::move(total[k]));
        }
    }
    return out;
}

H1Residuals verify_h1(const PoissonStructure &pi, unsigned order)
{
    return verify_h1(pi, karasev_series(pi, order), order);
}

ComparisonResult compare_series(const RealizationSeries &a, const RealizationSeries &b, unsigned order)
{
    if (a.series.dimension() != b.series.dimension()) {
        throw std::invalid_argument("compare_series: dimension mismatch");
    }
    if (order > a.series.max_order() || order > b.series.max_order()) {
        throw std::invalid_argument("compare_series: order " + std::to_string(order) + " exceeds a series' order");
    }
    for (unsigned n = 0; n <= order; ++n) {
        for (unsigned i = 0; i < a.series.dimension(); ++i) {
            if (a.series.coefficient(n, i) != b.series.coefficient(n, i)) {
                return {false, SeriesWitness{n, i, a.series.coefficient(n, i) - b.series.coefficient(n, i)}};
            }
        }
    }
    return {};
}

} // namespace symreal
