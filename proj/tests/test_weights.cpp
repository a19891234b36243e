#include <thread>

#include <doctest.h>

#include <symreal/rooted_tree.hpp>
#include <symreal/weights.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace symreal;
using namespace symreal::testing;

TEST_CASE("angle_polynomial of the first trees")
{
    CHECK(angle_polynomial(RootedTree::parse("[]")) == UniPoly({q(1, 2), q(-1)}));
    CHECK(angle_polynomial(RootedTree::parse("[[]]")) == UniPoly({q(1, 12), q(-1, 2), q(1, 2)}));
    CHECK(angle_polynomial(RootedTree::parse("[[][]]")) == UniPoly({q(1, 24), q(-1, 4), q(1, 2), q(-1, 3)}));
    CHECK(angle_polynomial(RootedTree::parse("[[[]]]")) == UniPoly({q(0), q(-1, 12), q(1, 4), q(-1, 6)}));
}

TEST_CASE("weight")
{
    CHECK(weight(RootedTree::parse("[]")) == q(1, 2));
    CHECK(weight(RootedTree::parse("[[]]")) == q(1, 12));
    CHECK(weight(RootedTree::parse("[[][]]")) == q(1, 24));
    CHECK(weight(RootedTree::parse("[[[]]]")) == q(0));
    CHECK(weight(RootedTree::chain(4)) == q(-1, 720));
}

TEST_CASE("weight_table")
{
    const auto two = weight_table(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].weight == q(1, 2));
    CHECK(two[1].weight == q(1, 12));

    CHECK(weight_table(1).size() == 1);

    const auto three = weight_table(3);
    REQUIRE(three.size() == 4);
    // order: [], [[]], [[[]]], [[][]]
    CHECK(three[0].weight == q(1, 2));
    CHECK(three[1].weight == q(1, 12));
    CHECK(three[2].weight == q(0));
    CHECK(three[3].weight == q(1, 24));

    CHECK_THROWS_AS(weight_table(0), std::invalid_argument);
}

TEST_CASE("chain weights follow the Bernoulli law")
{
    for (unsigned n = 1; n <= 8; ++n) {
        Rational expected = oracle::bernoulli(n) / factorial(n);
        if (n % 2 == 1) {
            expected = -expected;
        }
        CAPTURE(n);
        CHECK(weight(RootedTree::chain(n)) == expected);
    }
}

TEST_CASE("table entries are internally consistent")
{
    for (const auto &e : weight_table(7)) {
        CAPTURE(e.tree.canonical());
        CHECK(e.angle_poly.evaluate(q(0)) == e.weight);
        CHECK(e.angle_poly.degree() <= static_cast<int>(2 * e.tree.degree() - 1));
    }
}

TEST_CASE("weights agree with quadrature of the defining integrals")
{
    for (const auto &t : enumerate_trees(4)) {
        CAPTURE(t.canonical());
        CHECK(std::abs(weight(t).to_double() - oracle::angle_function_numeric(t, 0.0)) < 1e-9);
        CHECK(std::abs(angle_polynomial(t).evaluate(q(2, 5)).to_double() - oracle::angle_function_numeric(t, 0.4))
              < 1e-9);
    }
}

TEST_CASE("concurrent evaluation is order independent")
{
    const auto trees = enumerate_trees(7);
    const KontsevichWeights shared;
    std::vector<std::vector<Rational>> results(4);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < results.size(); ++w) {
        pool.emplace_back([&, w] {
            // each thread walks the list in a different rotation
            for (std::size_t k = 0; k < trees.size(); ++k) {
                results[w].push_back(shared.weight(trees[(k + w * 17) % trees.size()]));
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    for (std::size_t w = 0; w < results.size(); ++w) {
        for (std::size_t k = 0; k < trees.size(); ++k) {
            CHECK(results[w][k] == weight(trees[(k + w * 17) % trees.size()]));
        }
    }
    CHECK(shared.cache_size() == trees.size());
}
