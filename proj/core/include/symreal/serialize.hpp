#pragma once

#include <string>
#include <string_view>

#include <symreal/phase_poly.hpp>
#include <symreal/realization.hpp>

namespace symreal
{

/// JSON array of {"coeff": "num/den", "exps": [2d integers]} in ascending
/// lexicographic exponent order (variables ordered x^1..x^d, p_1..p_d).
std::string poly_to_records(const PhasePoly &poly);

/// Inverse of poly_to_records. When allow_x_only is set, exponent arrays of
/// length d are read as x-exponents. Throws FormatError.
PhasePoly poly_from_records(std::string_view json, unsigned dim, bool allow_x_only = false);

/// {"dimension": d, "order": N, "map": kind,
///  "coefficients": [{"order": n, "component": i (1-based), "poly": records}]}
/// listing every order 0..N and component.
std::string series_document(const RealizationSeries &r);

/// Inverse of series_document. Throws FormatError.
RealizationSeries parse_series_document(std::string_view json);

} // namespace symreal
