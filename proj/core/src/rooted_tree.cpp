#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include <symreal/rooted_tree.hpp>

namespace symreal
{

RootedTree::RootedTree() : canonical_("[]") {}

RootedTree RootedTree::graft(std::vector<RootedTree> children)
{
    std::sort(children.begin(), children.end(),
              [](const RootedTree &a, const RootedTree &b) { return a.canonical_ < b.canonical_; });
    RootedTree t;
    t.canonical_ = "[";
    for (const auto &c : children) {
        t.degree_ += c.degree_;
        t.canonical_ += c.canonical_;
    }
    t.canonical_ += "]";
    t.children_ = std::move(children);
    return t;
}

RootedTree RootedTree::chain(unsigned n)
{
    if (n == 0) {
        throw std::invalid_argument("RootedTree::chain: a tree has at least one vertex");
    }
    RootedTree t;
    for (unsigned k = 1; k < n; ++k) {
        t = graft({std::move(t)});
    }
    return t;
}

namespace
{

RootedTree parse_at(std::string_view text, std::size_t &pos)
{
    if (pos >= text.size() || text[pos] != '[') {
        throw std::invalid_argument("RootedTree::parse: expected '[' at offset " + std::to_string(pos));
    }
    ++pos;
    std::vector<RootedTree> kids;
    while (pos < text.size() && text[pos] == '[') {
        kids.push_back(parse_at(text, pos));
    }
    if (pos >= text.size() || text[pos] != ']') {
        throw std::invalid_argument("RootedTree::parse: expected ']' at offset " + std::to_string(pos));
    }
    ++pos;
    return RootedTree::graft(std::move(kids));
}

} // namespace

RootedTree RootedTree::parse(std::string_view text)
{
    std::size_t pos = 0;
    auto t = parse_at(text, pos);
    if (pos != text.size()) {
        throw std::invalid_argument("RootedTree::parse: trailing characters in '" + std::string(text) + "'");
    }
    return t;
}

bool RootedTree::is_chain() const
{
    return max_branching() <= 1;
}

unsigned RootedTree::max_branching() const
{
    auto best = static_cast<unsigned>(children_.size());
    for (const auto &c : children_) {
        best = std::max(best, c.max_branching());
    }
    return best;
}

bool operator<(const RootedTree &a, const RootedTree &b)
{
    if (a.degree_ != b.degree_) {
        return a.degree_ < b.degree_;
    }
    return a.canonical_ < b.canonical_;
}

std::vector<RootedTree> enumerate_trees(unsigned max_degree)
{
    if (max_degree == 0) {
        throw std::invalid_argument("enumerate_trees: max_degree must be at least 1");
    }
    // Trees are produced degree by degree; a tree of degree n is a root over a
    // multiset of smaller trees whose degrees sum to n - 1. Multisets are
    // drawn as non-decreasing index sequences into `all`.
    std::vector<RootedTree> all{RootedTree::leaf()};
    for (unsigned n = 2; n <= max_degree; ++n) {
        const std::size_t pool = all.size();
        std::vector<RootedTree> fresh;
        std::vector<RootedTree> picked;
        std::function<void(std::size_t, unsigned)> choose = [&](std::size_t from, unsigned remaining) {
            if (remaining == 0) {
                fresh.push_back(RootedTree::graft(picked));
                return;
            }
            for (std::size_t k = from; k < pool; ++k) {
                if (all[k].degree() > remaining) {
                    continue;
                }
                picked.push_back(all[k]);
                choose(k, remaining - all[k].degree());
                picked.pop_back();
            }
        };
        choose(0, n - 1);
        std::sort(fresh.begin(), fresh.end());
        all.insert(all.end(), std::make_move_iterator(fresh.begin()), std::make_move_iterator(fresh.end()));
    }
    return all;
}

std::uint64_t symmetry_order(const RootedTree &t)
{
    std::uint64_t sigma = 1;
    const auto &kids = t.children();
    // Children are sorted, so equal classes are adjacent.
    for (std::size_t i = 0; i < kids.size();) {
        std::size_t j = i;
        while (j < kids.size() && kids[j] == kids[i]) {
            ++j;
        }
        const auto mult = static_cast<std::uint64_t>(j - i);
        const std::uint64_t sub = symmetry_order(kids[i]);
        for (std::uint64_t k = 1; k <= mult; ++k) {
            sigma *= k * sub;
        }
        i = j;
    }
    return sigma;
}

} // namespace symreal
