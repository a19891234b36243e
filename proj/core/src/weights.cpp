#include <symreal/weights.hpp>

namespace symreal
{

UniPoly KontsevichWeights::angle_polynomial(const RootedTree &t) const
{
    {
        const std::lock_guard lock(mutex_);
        if (auto it = cache_.find(t.canonical()); it != cache_.end()) {
            return it->second;
        }
    }
    UniPoly result;
    if (t.children().empty()) {
        result = UniPoly({Rational(1, 2), Rational(-1)});
    } else {
        UniPoly integrand = UniPoly::constant(Rational(1));
        for (const auto &c : t.children()) {
            integrand = integrand * angle_polynomial(c);
        }
        result = unipoly_nested_integral(integrand);
    }
    const std::lock_guard lock(mutex_);
    return cache_.try_emplace(t.canonical(), std::move(result)).first->second;
}

Rational KontsevichWeights::weight(const RootedTree &t) const
{
    return angle_polynomial(t).evaluate(Rational(0));
}

std::size_t KontsevichWeights::cache_size() const
{
    const std::lock_guard lock(mutex_);
    return cache_.size();
}

const KontsevichWeights &default_weights()
{
    static const KontsevichWeights instance;
    return instance;
}

UniPoly angle_polynomial(const RootedTree &t)
{
    return default_weights().angle_polynomial(t);
}

Rational weight(const RootedTree &t)
{
    return default_weights().weight(t);
}

std::vector<WeightEntry> weight_table(unsigned max_degree)
{
    std::vector<WeightEntry> out;
    for (auto &t : enumerate_trees(max_degree)) {
        auto poly = angle_polynomial(t);
        auto w = poly.evaluate(Rational(0));
        out.push_back({std::move(t), std::move(poly), std::move(w)});
    }
    return out;
}

} // namespace symreal
