#include <doctest.h>

#include <symreal/karasev.hpp>
#include <symreal/realization.hpp>

#include "support/fixtures.hpp"

using namespace symreal;
using namespace symreal::testing;

namespace
{

/// c * x1^a x2^b p1^c p2^d in dimension 2.
PhasePoly m2(const Rational &c, unsigned a, unsigned b, unsigned pa, unsigned pb)
{
    return PhasePoly::monomial(2, {a, b, pa, pb}, c);
}

} // namespace

TEST_CASE("lie_iterates")
{
    const auto pi = linear_pi_2d();
    const auto it = lie_iterates(pi, 3);
    CHECK(it.max_order() == 3);
    CHECK(it.at(0, 0) == xv(2, 1));
    CHECK(it.at(0, 1) == xv(2, 2));
    CHECK(it.at(1, 0) == xv(2, 1) * pv(2, 2));

    const auto so3 = so3_pi();
    const auto it3 = lie_iterates(so3, 4);
    for (unsigned i = 0; i < 3; ++i) {
        PhasePoly expected(3);
        for (unsigned k = 0; k < 3; ++k) {
            expected -= so3.entry(k, i) * PhasePoly::p(3, k);
        }
        CHECK(it3.at(1, i) == expected);
        for (unsigned n = 0; n <= 4; ++n) {
            CHECK(it3.at(n, i).is_p_homogeneous(n));
        }
    }
}

TEST_CASE("phi_series")
{
    const auto pi = so3_pi();
    const auto phi = phi_series(pi, 3);
    const auto it = lie_iterates(pi, 3);
    for (unsigned i = 0; i < 3; ++i) {
        CHECK(phi.coefficient(0, i) == PhasePoly::x(3, i));
        CHECK(phi.coefficient(1, i) == it.at(1, i) * q(1, 2));
        CHECK(phi.coefficient(3, i) == it.at(3, i) * q(1, 24));
    }
    const auto flat = phi_series(constant_pi(), 4);
    CHECK(flat.coefficient(1, 0) == pv(2, 2) * q(1, 2));
    for (unsigned n = 2; n <= 4; ++n) {
        CHECK(flat.coefficient(n, 0).is_zero());
        CHECK(flat.coefficient(n, 1).is_zero());
    }
}

TEST_CASE("karasev_series")
{
    SUBCASE("first order is 1/2 pi^{vi} p_v")
    {
        const auto pi = so3_pi();
        const auto a = karasev_series(pi, 1);
        CHECK(a.kind == SeriesKind::karasev);
        for (unsigned i = 0; i < 3; ++i) {
            PhasePoly expected(3);
            for (unsigned v = 0; v < 3; ++v) {
                expected += pi.entry(v, i) * PhasePoly::p(3, v) * q(1, 2);
            }
            CHECK(a.series.coefficient(1, i) == expected);
        }
    }
    SUBCASE("frozen values from direct inversion of phi, pi12 = x1^2 + x2")
    {
        // Solved order by order with a computer-algebra system by substituting
        // an ansatz into phi(alpha(x,p), p) = x.
        const auto a = karasev_series(quadratic_pi_2d(), 3).series;
        CHECK(a.coefficient(1, 0) == m2(q(-1, 2), 2, 0, 0, 1) + m2(q(-1, 2), 0, 1, 0, 1));
        CHECK(a.coefficient(1, 1) == m2(q(1, 2), 2, 0, 1, 0) + m2(q(1, 2), 0, 1, 1, 0));
        CHECK(a.coefficient(2, 0)
              == m2(q(-1, 12), 2, 0, 1, 1) + m2(q(-1, 12), 0, 1, 1, 1) + m2(q(1, 6), 3, 0, 0, 2)
                     + m2(q(1, 6), 1, 1, 0, 2));
        CHECK(a.coefficient(2, 1)
              == m2(q(1, 12), 2, 0, 2, 0) + m2(q(1, 12), 0, 1, 2, 0) + m2(q(-1, 6), 3, 0, 1, 1)
                     + m2(q(-1, 6), 1, 1, 1, 1));
        CHECK(a.coefficient(3, 0) == m2(q(-1, 24), 4, 0, 0, 3) + m2(q(-1, 12), 2, 1, 0, 3) + m2(q(-1, 24), 0, 2, 0, 3));
        CHECK(a.coefficient(3, 1) == m2(q(1, 24), 4, 0, 1, 2) + m2(q(1, 12), 2, 1, 1, 2) + m2(q(1, 24), 0, 2, 1, 2));
    }
    SUBCASE("linear pi reproduces the Bernoulli closed form")
    {
        for (const auto &pi : {so3_pi(), linear_pi_2d()}) {
            CHECK(karasev_series(pi, 6).series == linear_closed_form(pi, 6).series);
        }
    }
    SUBCASE("equals the tree expansion")
    {
        for (const auto &[name, pi] : battery()) {
            CAPTURE(name);
            CHECK(compare_series(source_series(pi, 5), karasev_series(pi, 5), 5).equal);
        }
    }
    SUBCASE("pairing and homogeneity")
    {
        for (const auto &[name, pi] : battery()) {
            const auto a = karasev_series(pi, 5);
            CHECK_FALSE(check_pairing(a.series, 5).has_value());
            CHECK_FALSE(check_homogeneity(a.series, 5).has_value());
        }
    }
    CHECK_THROWS_AS(karasev_series(so3_pi(), 0), std::invalid_argument);
}

TEST_CASE("verify_h1")
{
    SUBCASE("battery through order 5")
    {
        for (const auto &[name, pi] : battery()) {
            CAPTURE(name);
            for (const auto &[key, poly] : verify_h1(pi, 5)) {
                CHECK(poly.is_zero());
            }
        }
    }
    SUBCASE("first order cancels")
    {
        const auto res = verify_h1(quadratic_pi_2d(), 1);
        CHECK(res.size() == 4);
        CHECK(res.at({1, 0}).is_zero());
        CHECK(res.at({1, 1}).is_zero());
    }
    SUBCASE("corrupted alpha_(2)")
    {
        const auto pi = so3_pi();
        auto a = karasev_series(pi, 3);
        a.series.coefficient(2, 2) += pv(3, 1) * pv(3, 1);
        const auto res = verify_h1(pi, a, 3);
        CHECK(res.at({1, 2}).is_zero());
        CHECK(res.at({2, 2}) == pv(3, 1) * pv(3, 1));
    }
    SUBCASE("tree expansion also solves phi(alpha, p) = x")
    {
        const auto pi = quadratic_pi_2d();
        for (const auto &[key, poly] : verify_h1(pi, source_series(pi, 4), 4)) {
            CHECK(poly.is_zero());
        }
    }
}

TEST_CASE("compare_series")
{
    const auto pi = so3_pi();
    const auto s = source_series(pi, 5);
    CHECK(compare_series(s, s, 5).equal);
    CHECK(compare_series(s, karasev_series(pi, 5), 5).equal);

    const auto t = target_series(pi, 5);
    const auto diff = compare_series(s, t, 1);
    CHECK_FALSE(diff.equal);
    REQUIRE(diff.first_difference.has_value());
    CHECK(diff.first_difference->order == 1);
    CHECK(diff.first_difference->component == 0);
    CHECK(diff.first_difference->value == s.series.coefficient(1, 0) * q(2));

    CHECK_THROWS_AS(compare_series(s, source_series(pi, 2), 3), std::invalid_argument);
    CHECK_THROWS_AS(compare_series(s, source_series(linear_pi_2d(), 5), 5), std::invalid_argument);
}
