#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <symreal/phase_poly.hpp>

namespace symreal
{

/// Polynomial bivector pi on R^d. Only the strict upper triangle is stored;
/// pi^{ji} = -pi^{ij} and pi^{ii} = 0 follow from the accessor. Indices are
/// 0-based.
class PoissonStructure
{
public:
    using Upper = std::map<std::pair<unsigned, unsigned>, PhasePoly>;

    PoissonStructure() = default;
    /// Throws std::invalid_argument on i >= j, out-of-range indices,
    /// p-dependent entries or dimension mismatches.
    PoissonStructure(unsigned dim, Upper upper);

    [[nodiscard]] unsigned dimension() const { return dim_; }
    [[nodiscard]] const Upper &upper() const { return upper_; }
    /// pi^{ij} for any i, j.
    [[nodiscard]] PhasePoly entry(unsigned i, unsigned j) const;

    /// Every entry is a linear form in x (no constant part, x-degree 1).
    [[nodiscard]] bool is_linear() const;

private:
    unsigned dim_ = 0;
    Upper upper_;
};

/// Parses the Poisson input document:
/// {"dimension": d, "entries": [{"i": .., "j": .., "poly": [{"coeff": "n/d", "exps": [..]}]}]}
/// with 1-based i < j. "exps" holds d x-exponents, or 2d phase-space
/// exponents whose p part must vanish. Throws FormatError.
PoissonStructure load_poisson(std::string_view document);

struct JacobiReport {
    bool holds = true;
    /// First failing triple i < j < k (0-based) and its Jacobiator.
    std::optional<std::array<unsigned, 3>> triple;
    PhasePoly residual;
};

/// Jacobiator sum_l (pi^{il} d_l pi^{jk} + pi^{jl} d_l pi^{ki} + pi^{kl} d_l pi^{ij}).
PhasePoly jacobiator(const PoissonStructure &pi, unsigned i, unsigned j, unsigned k);
JacobiReport jacobi_check(const PoissonStructure &pi);

/// Flat spray: component j is sign * sum_i pi^{ij}(x) p_i. sign = +1 gives
/// V, sign = -1 gives its opposite.
struct SprayField {
    unsigned dimension = 0;
    int sign = 1;
    std::vector<PhasePoly> components;
};

SprayField spray(const PoissonStructure &pi, int sign);

/// Lie derivative sum_j X^j d_{x^j} f, with p held constant.
PhasePoly lie_derivative(const SprayField &field, const PhasePoly &f);

} // namespace symreal
