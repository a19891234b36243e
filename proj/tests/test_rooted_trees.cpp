#include <algorithm>
#include <set>

#include <doctest.h>

#include <symreal/rooted_tree.hpp>

#include "support/oracles.hpp"

using namespace symreal;
namespace oracle = symreal::testing::oracle;

TEST_CASE("canonical_string")
{
    const auto leaf = RootedTree::leaf();
    CHECK(canonical_string(leaf) == "[]");
    CHECK(canonical_string(RootedTree::graft({leaf, leaf})) == "[[][]]");
    CHECK(canonical_string(RootedTree::graft({RootedTree::graft({leaf})})) == "[[[]]]");
    CHECK(RootedTree::chain(4).canonical() == "[[[[]]]]");

    // child order is irrelevant
    const auto a = RootedTree::graft({leaf, RootedTree::graft({leaf})});
    const auto b = RootedTree::graft({RootedTree::graft({leaf}), leaf});
    CHECK(a == b);
    CHECK(a.canonical() == "[[[]][]]");
}

TEST_CASE("parse is the inverse of canonical_string")
{
    for (const auto &t : enumerate_trees(6)) {
        CHECK(RootedTree::parse(t.canonical()) == t);
    }
    CHECK(RootedTree::parse("[[][[]]]") == RootedTree::parse("[[[]][]]"));
    CHECK_THROWS_AS(RootedTree::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(RootedTree::parse("[[]"), std::invalid_argument);
    CHECK_THROWS_AS(RootedTree::parse("[]]"), std::invalid_argument);
    CHECK_THROWS_AS(RootedTree::parse("[x]"), std::invalid_argument);
}

TEST_CASE("enumerate_trees")
{
    CHECK_THROWS_AS(enumerate_trees(0), std::invalid_argument);

    const auto one = enumerate_trees(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].canonical() == "[]");

    const auto three = enumerate_trees(3);
    REQUIRE(three.size() == 4);
    CHECK(three[0].canonical() == "[]");
    CHECK(three[1].canonical() == "[[]]");
    CHECK(three[2].canonical() == "[[[]]]");
    CHECK(three[3].canonical() == "[[][]]");
}

TEST_CASE("class counts per degree match brute-force labelled enumeration")
{
    const auto trees = enumerate_trees(7);
    const std::vector<std::size_t> expected{1, 1, 2, 4, 9, 20, 48};
    for (unsigned n = 1; n <= 7; ++n) {
        const auto count = static_cast<std::size_t>(
            std::count_if(trees.begin(), trees.end(), [n](const RootedTree &t) { return t.degree() == n; }));
        CHECK(count == expected[n - 1]);
        if (n <= 6) {
            CHECK(oracle::brute_force_tree_classes(n) == expected[n - 1]);
        }
    }
}

TEST_CASE("enumeration output is sorted, duplicate-free and consistent")
{
    const auto trees = enumerate_trees(7);
    CHECK(std::is_sorted(trees.begin(), trees.end()));
    std::set<std::string> seen;
    for (const auto &t : trees) {
        CHECK(seen.insert(t.canonical()).second);
        CHECK(std::count(t.canonical().begin(), t.canonical().end(), '[') == static_cast<long>(t.degree()));
        CHECK(oracle::ahu_code(oracle::to_parent_array(t)).size() == t.canonical().size());
    }
    // stable across calls
    const auto again = enumerate_trees(7);
    CHECK(std::equal(trees.begin(), trees.end(), again.begin(), again.end()));
}

TEST_CASE("symmetry_order")
{
    const auto leaf = RootedTree::leaf();
    CHECK(symmetry_order(leaf) == 1);
    CHECK(symmetry_order(RootedTree::parse("[[][]]")) == 2);
    CHECK(symmetry_order(RootedTree::parse("[[[]]]")) == 1);
    CHECK(symmetry_order(RootedTree::parse("[[][][]]")) == 6);
    CHECK(symmetry_order(RootedTree::parse("[[[][]][[][]]]")) == 8);

    for (const auto &t : enumerate_trees(6)) {
        CAPTURE(t.canonical());
        CHECK(symmetry_order(t) == oracle::brute_force_automorphisms(oracle::to_parent_array(t)));
    }
}

TEST_CASE("chain and branching helpers")
{
    CHECK(RootedTree::chain(1) == RootedTree::leaf());
    CHECK(RootedTree::chain(5).is_chain());
    CHECK(RootedTree::chain(5).degree() == 5);
    CHECK_FALSE(RootedTree::parse("[[][]]").is_chain());
    CHECK(RootedTree::parse("[[[][][]]]").max_branching() == 3);
    CHECK_THROWS_AS(RootedTree::chain(0), std::invalid_argument);
}
