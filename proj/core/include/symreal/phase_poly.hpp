#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <symreal/rational.hpp>

namespace symreal
{

/// A coordinate of phase space T*R^d. Indices are 0-based; x^1 is Var::x(0).
struct Var {
    enum class Kind : std::uint8_t { x, p };

    Kind kind;
    unsigned index;

    static constexpr Var x(unsigned i) { return {Kind::x, i}; }
    static constexpr Var p(unsigned i) { return {Kind::p, i}; }

    /// Slot in an exponent vector under the fixed ordering x^1..x^d, p_1..p_d.
    [[nodiscard]] constexpr unsigned slot(unsigned dim) const { return kind == Kind::x ? index : dim + index; }

    friend constexpr bool operator==(const Var &, const Var &) = default;
};

using Exponents = std::vector<std::uint32_t>;

/// Sparse polynomial over Q in x^1..x^d, p_1..p_d.
///
/// Terms live in an ordered map keyed by the exponent vector (length 2d,
/// compared lexicographically), and zero coefficients are never stored, so
/// structural equality coincides with equality as polynomials.
class PhasePoly
{
public:
    using TermMap = std::map<Exponents, Rational>;

    PhasePoly() = default;
    explicit PhasePoly(unsigned dim);

    static PhasePoly constant(unsigned dim, const Rational &c);
    static PhasePoly variable(unsigned dim, Var v);
    static PhasePoly x(unsigned dim, unsigned i) { return variable(dim, Var::x(i)); }
    static PhasePoly p(unsigned dim, unsigned i) { return variable(dim, Var::p(i)); }
    /// Throws if the exponent vector does not have length 2*dim.
    static PhasePoly monomial(unsigned dim, Exponents exps, const Rational &c);

    [[nodiscard]] unsigned dimension() const { return dim_; }
    [[nodiscard]] const TermMap &terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    /// Adds c * monomial(exps); drops the term if it cancels.
    void add_term(const Exponents &exps, const Rational &c);

    [[nodiscard]] PhasePoly partial(Var v) const;

    /// True iff no monomial carries a p exponent.
    [[nodiscard]] bool depends_only_on_x() const;
    /// True iff every monomial has total p-degree exactly n (vacuous for zero).
    [[nodiscard]] bool is_p_homogeneous(unsigned n) const;
    /// Largest total x-degree over the monomials, -1 for zero.
    [[nodiscard]] int max_x_degree() const;
    /// Smallest total x-degree over the monomials, -1 for zero.
    [[nodiscard]] int min_x_degree() const;

    /// The substitution p -> -p.
    [[nodiscard]] PhasePoly flip_momenta() const;

    /// Evaluates at a point given in variable order x^1..x^d, p_1..p_d.
    [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;

    PhasePoly &operator+=(const PhasePoly &o);
    PhasePoly &operator-=(const PhasePoly &o);
    PhasePoly &operator*=(const Rational &c);
    PhasePoly &operator*=(const PhasePoly &o);

    friend PhasePoly operator+(PhasePoly a, const PhasePoly &b) { return a += b; }
    friend PhasePoly operator-(PhasePoly a, const PhasePoly &b) { return a -= b; }
    friend PhasePoly operator*(PhasePoly a, const Rational &c) { return a *= c; }
    friend PhasePoly operator*(const Rational &c, PhasePoly a) { return a *= c; }
    friend PhasePoly operator*(const PhasePoly &a, const PhasePoly &b);
    friend PhasePoly operator-(PhasePoly a);

    friend bool operator==(const PhasePoly &a, const PhasePoly &b);

    /// e.g. "1/2*x1*p2^2 - x3"; variables are 1-based in the printout.
    [[nodiscard]] std::string to_string() const;

private:
    void require_same_dim(const PhasePoly &o) const;

    unsigned dim_ = 0;
    TermMap terms_;
};

PhasePoly multipoly_mul(const PhasePoly &a, const PhasePoly &b);
PhasePoly multipoly_partial(const PhasePoly &a, Var v);

} // namespace symreal
