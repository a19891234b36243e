#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include <symreal/rational.hpp>
#include <symreal/rooted_tree.hpp>
#include <symreal/unipoly.hpp>

namespace symreal
{

struct WeightEntry {
    RootedTree tree;
    UniPoly angle_poly;
    Rational weight;
};

/// Angle polynomials I_t(theta) and tree weights W_t = I_t(0), in Kathotia's
/// normalisation.
///
/// I_leaf = 1/2 - theta and I_[t1..tm] is the nested integral of the product
/// of the children's polynomials. Results are memoised per isomorphism class;
/// the cache is guarded by a mutex, so one instance may be shared across
/// threads.
class KontsevichWeights
{
public:
    [[nodiscard]] UniPoly angle_polynomial(const RootedTree &t) const;
    [[nodiscard]] Rational weight(const RootedTree &t) const;
    [[nodiscard]] std::size_t cache_size() const;

private:
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::string, UniPoly> cache_;
};

/// Process-wide shared instance.
const KontsevichWeights &default_weights();

UniPoly angle_polynomial(const RootedTree &t);
Rational weight(const RootedTree &t);
std::vector<WeightEntry> weight_table(unsigned max_degree);

} // namespace symreal
