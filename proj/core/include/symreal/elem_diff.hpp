#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <symreal/phase_poly.hpp>
#include <symreal/poisson.hpp>
#include <symreal/rooted_tree.hpp>

namespace symreal
{

/// Elementary differentials D_t^u X of one vector field X.
///
/// D_leaf^u X = X^u and
/// D_[t1..tm]^u X = d_{i1}...d_{im} X^u  D_{t1}^{i1} X ... D_{tm}^{im} X,
/// summed over i1..im in {0..d-1}; derivatives act on x only.
///
/// Values are memoised per (canonical subtree, component) and mixed partials
/// of X^u per sorted index tuple. Both caches are mutex-guarded.
class ElementaryDifferentials
{
public:
    static constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

    /// memo_limit caps the number of cached (subtree, component) entries.
    explicit ElementaryDifferentials(SprayField field, std::size_t memo_limit = unlimited);

    [[nodiscard]] const SprayField &field() const { return field_; }
    [[nodiscard]] unsigned dimension() const { return field_.dimension; }

    /// Throws std::out_of_range if u >= dimension().
    [[nodiscard]] PhasePoly operator()(const RootedTree &t, unsigned u) const;

private:
    [[nodiscard]] PhasePoly compute(const RootedTree &t, unsigned u) const;
    [[nodiscard]] PhasePoly derivative(unsigned u, std::vector<unsigned> indices) const;

    SprayField field_;
    std::size_t memo_limit_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::string, unsigned>, PhasePoly> memo_;
    mutable std::map<std::pair<unsigned, std::vector<unsigned>>, PhasePoly> partials_;
};

PhasePoly elementary_differential(const RootedTree &t, const SprayField &field, unsigned u);

} // namespace symreal
