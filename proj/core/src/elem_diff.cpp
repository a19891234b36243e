#include <algorithm>
#include <stdexcept>

#include <symreal/elem_diff.hpp>

namespace symreal
{

ElementaryDifferentials::ElementaryDifferentials(SprayField field, std::size_t memo_limit)
    : field_(std::move(field)), memo_limit_(memo_limit)
{
}

PhasePoly ElementaryDifferentials::operator()(const RootedTree &t, unsigned u) const
{
    if (u >= field_.dimension) {
        throw std::out_of_range("elementary_differential: component " + std::to_string(u)
                                + " out of range for dimension " + std::to_string(field_.dimension));
    }
    std::pair key{t.canonical(), u};
    {
        const std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
    }
    PhasePoly value = compute(t, u);
    const std::lock_guard lock(mutex_);
    if (memo_.size() < memo_limit_) {
        memo_.try_emplace(std::move(key), value);
    }
    return value;
}

PhasePoly ElementaryDifferentials::derivative(unsigned u, std::vector<unsigned> indices) const
{
    std::sort(indices.begin(), indices.end());
    std::pair key{u, indices};
    {
        const std::lock_guard lock(mutex_);
        if (auto it = partials_.find(key); it != partials_.end()) {
            return it->second;
        }
    }
    PhasePoly value = field_.components[u];
    for (auto i : indices) {
        if (value.is_zero()) {
            break;
        }
        value = value.partial(Var::x(i));
    }
    const std::lock_guard lock(mutex_);
    return partials_.try_emplace(std::move(key), std::move(value)).first->second;
}

PhasePoly ElementaryDifferentials::compute(const RootedTree &t, unsigned u) const
{
    const unsigned d = field_.dimension;
    const auto &kids = t.children();
    if (kids.empty()) {
        return field_.components[u];
    }
    const std::size_t m = kids.size();

    // child_values[k][i] = D_{t_k}^i X
    std::vector<std::vector<PhasePoly>> child_values(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (k > 0 && kids[k] == kids[k - 1]) {
            child_values[k] = child_values[k - 1];
            continue;
        }
        for (unsigned i = 0; i < d; ++i) {
            child_values[k].push_back((*this)(kids[k], i));
        }
    }

    PhasePoly acc(d);
    std::vector<unsigned> idx(m, 0);
    while (true) {
        bool vanishes = false;
        for (std::size_t k = 0; k < m && !vanishes; ++k) {
            vanishes = child_values[k][idx[k]].is_zero();
        }
        if (!vanishes) {
            PhasePoly term = derivative(u, idx);
            for (std::size_t k = 0; k < m && !term.is_zero(); ++k) {
                term = term * child_values[k][idx[k]];
            }
            acc += term;
        }
        std::size_t pos = 0;
        while (pos < m && ++idx[pos] == d) {
            idx[pos++] = 0;
        }
        if (pos == m) {
            break;
        }
    }
    return acc;
}

PhasePoly elementary_differential(const RootedTree &t, const SprayField &field, unsigned u)
{
    return ElementaryDifferentials(field)(t, u);
}

} // namespace symreal
