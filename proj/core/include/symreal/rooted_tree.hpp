#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symreal
{

/// Topological (unlabelled) rooted tree in canonical form.
///
/// A tree is a root grafted onto a multiset of subtrees. Children are kept
/// sorted by their canonical strings, so two trees compare equal exactly when
/// they are isomorphic.
class RootedTree
{
public:
    /// The single-vertex tree.
    RootedTree();

    static RootedTree leaf() { return {}; }
    /// [t_1, ..., t_m] with a fresh root; child order is irrelevant.
    static RootedTree graft(std::vector<RootedTree> children);
    /// Path with n vertices (n >= 1).
    static RootedTree chain(unsigned n);
    /// Inverse of canonical(); accepts children in any order.
    static RootedTree parse(std::string_view text);

    [[nodiscard]] const std::vector<RootedTree> &children() const { return children_; }
    [[nodiscard]] unsigned degree() const { return degree_; }
    [[nodiscard]] const std::string &canonical() const { return canonical_; }

    /// No vertex has more than one child.
    [[nodiscard]] bool is_chain() const;
    /// Largest number of children at any vertex.
    [[nodiscard]] unsigned max_branching() const;

    friend bool operator==(const RootedTree &a, const RootedTree &b) { return a.canonical_ == b.canonical_; }
    /// Degree first, then canonical string.
    friend bool operator<(const RootedTree &a, const RootedTree &b);

private:
    std::vector<RootedTree> children_;
    unsigned degree_ = 1;
    std::string canonical_;
};

/// "[]" for the leaf, otherwise "[" + sorted child strings + "]".
inline const std::string &canonical_string(const RootedTree &t)
{
    return t.canonical();
}

/// One representative per isomorphism class with 1 <= degree <= max_degree,
/// ordered by degree and then canonical string. Throws for max_degree == 0.
std::vector<RootedTree> enumerate_trees(unsigned max_degree);

/// Order of the root-fixing automorphism group.
std::uint64_t symmetry_order(const RootedTree &t);

} // namespace symreal
