#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include <symreal/phase_poly.hpp>
#include <symreal/poisson.hpp>
#include <symreal/rational.hpp>

namespace symreal::testing
{

inline Rational q(long n, long d = 1)
{
    return Rational(n, d);
}

// 1-based helpers so tests read like the formulas.
inline PhasePoly xv(unsigned dim, unsigned i)
{
    return PhasePoly::x(dim, i - 1);
}

inline PhasePoly pv(unsigned dim, unsigned i)
{
    return PhasePoly::p(dim, i - 1);
}

inline PhasePoly cst(unsigned dim, const Rational &c)
{
    return PhasePoly::constant(dim, c);
}

/// Builds pi from 1-based (i, j, poly) triples with i < j.
inline PoissonStructure make_poisson(unsigned dim, std::vector<std::tuple<unsigned, unsigned, PhasePoly>> entries)
{
    PoissonStructure::Upper up;
    for (auto &[i, j, poly] : entries) {
        up.emplace(std::pair{i - 1, j - 1}, std::move(poly));
    }
    return PoissonStructure(dim, std::move(up));
}

inline PoissonStructure constant_pi()
{
    return make_poisson(2, {{1, 2, cst(2, q(1))}});
}

inline PoissonStructure linear_pi_2d()
{
    return make_poisson(2, {{1, 2, xv(2, 1)}});
}

inline PoissonStructure quadratic_pi_2d()
{
    return make_poisson(2, {{1, 2, xv(2, 1) * xv(2, 1) + xv(2, 2)}});
}

/// pi^{12} = x^3, pi^{23} = x^1, pi^{31} = x^2.
inline PoissonStructure so3_pi()
{
    return make_poisson(3, {{1, 2, xv(3, 3)}, {2, 3, xv(3, 1)}, {1, 3, -xv(3, 2)}});
}

struct NamedPoisson {
    std::string name;
    PoissonStructure pi;
};

inline std::vector<NamedPoisson> battery()
{
    return {{"constant d=2", constant_pi()},
            {"pi12=x1 d=2", linear_pi_2d()},
            {"pi12=x1^2+x2 d=2", quadratic_pi_2d()},
            {"so(3) d=3", so3_pi()}};
}

/// Small random polynomial: up to `terms` monomials, exponents <= max_exp,
/// coefficients n/d with |n| <= 5, 1 <= d <= 4.
inline PhasePoly random_poly(std::mt19937 &rng, unsigned dim, unsigned terms, unsigned max_exp, bool x_only = false)
{
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<unsigned> ex(0, max_exp);
    std::uniform_int_distribution<unsigned> count(0, terms);
    PhasePoly out(dim);
    const unsigned n = count(rng);
    for (unsigned t = 0; t < n; ++t) {
        Exponents e(2 * dim, 0);
        for (unsigned k = 0; k < (x_only ? dim : 2 * dim); ++k) {
            e[k] = ex(rng);
        }
        out.add_term(e, Rational(num(rng), den(rng)));
    }
    return out;
}

inline Rational random_rational(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    return Rational(num(rng), den(rng));
}

} // namespace symreal::testing
