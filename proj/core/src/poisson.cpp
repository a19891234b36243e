#include <array>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include <symreal/errors.hpp>
#include <symreal/poisson.hpp>
#include <symreal/serialize.hpp>

namespace symreal
{

PoissonStructure::PoissonStructure(unsigned dim, Upper upper) : dim_(dim)
{
    if (dim == 0) {
        throw std::invalid_argument("PoissonStructure: dimension must be positive");
    }
    for (auto &[ij, poly] : upper) {
        const auto [i, j] = ij;
        if (i >= j) {
            throw std::invalid_argument("PoissonStructure: entries must satisfy i < j");
        }
        if (j >= dim) {
            throw std::invalid_argument("PoissonStructure: index out of range");
        }
        if (poly.is_zero()) {
            continue;
        }
        if (poly.dimension() != dim) {
            throw std::invalid_argument("PoissonStructure: entry dimension mismatch");
        }
        if (!poly.depends_only_on_x()) {
            throw std::invalid_argument("PoissonStructure: entry (" + std::to_string(i + 1) + ","
                                        + std::to_string(j + 1) + ") depends on p");
        }
        upper_.emplace(ij, std::move(poly));
    }
}

PhasePoly PoissonStructure::entry(unsigned i, unsigned j) const
{
    if (i >= dim_ || j >= dim_) {
        throw std::out_of_range("PoissonStructure::entry: index out of range");
    }
    if (i == j) {
        return PhasePoly(dim_);
    }
    const bool flip = i > j;
    const auto it = upper_.find(flip ? std::pair{j, i} : std::pair{i, j});
    if (it == upper_.end()) {
        return PhasePoly(dim_);
    }
    return flip ? -it->second : it->second;
}

bool PoissonStructure::is_linear() const
{
    for (const auto &[ij, poly] : upper_) {
        if (poly.min_x_degree() != 1 || poly.max_x_degree() != 1) {
            return false;
        }
    }
    return true;
}

PoissonStructure load_poisson(std::string_view document)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error &e) {
        throw FormatError(std::string("poisson document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("entries")) {
        throw FormatError("poisson document: expected an object with 'dimension' and 'entries'");
    }
    if (!doc["dimension"].is_number_unsigned() || doc["dimension"].get<unsigned>() == 0) {
        throw FormatError("poisson document: 'dimension' must be a positive integer");
    }
    const auto dim = doc["dimension"].get<unsigned>();
    if (!doc["entries"].is_array()) {
        throw FormatError("poisson document: 'entries' must be an array");
    }
    PoissonStructure::Upper upper;
    for (const auto &e : doc["entries"]) {
        if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("poly")) {
            throw FormatError("poisson document: each entry needs 'i', 'j' and 'poly'");
        }
        if (!e["i"].is_number_integer() || !e["j"].is_number_integer()) {
            throw FormatError("poisson document: 'i' and 'j' must be integers");
        }
        const auto i = e["i"].get<long>();
        const auto j = e["j"].get<long>();
        if (i < 1 || j < 1 || i > static_cast<long>(dim) || j > static_cast<long>(dim)) {
            throw FormatError("poisson document: index out of range in entry (" + std::to_string(i) + ","
                              + std::to_string(j) + ")");
        }
        if (i >= j) {
            throw FormatError("poisson document: entry (" + std::to_string(i) + "," + std::to_string(j)
                              + ") must satisfy i < j");
        }
        const std::pair key{static_cast<unsigned>(i - 1), static_cast<unsigned>(j - 1)};
        if (upper.contains(key)) {
            throw FormatError("poisson document: duplicate entry (" + std::to_string(i) + "," + std::to_string(j)
                              + ")");
        }
        PhasePoly poly = poly_from_records(e["poly"].dump(), dim, /*allow_x_only=*/true);
        if (!poly.depends_only_on_x()) {
            throw FormatError("poisson document: entry (" + std::to_string(i) + "," + std::to_string(j)
                              + ") references p-variables");
        }
        upper.emplace(key, std::move(poly));
    }
    return PoissonStructure(dim, std::move(upper));
}

PhasePoly jacobiator(const PoissonStructure &pi, unsigned i, unsigned j, unsigned k)
{
    const unsigned d = pi.dimension();
    PhasePoly acc(d);
    for (unsigned l = 0; l < d; ++l) {
        acc += pi.entry(i, l) * pi.entry(j, k).partial(Var::x(l));
        acc += pi.entry(j, l) * pi.entry(k, i).partial(Var::x(l));
        acc += pi.entry(k, l) * pi.entry(i, j).partial(Var::x(l));
    }
    return acc;
}

JacobiReport jacobi_check(const PoissonStructure &pi)
{
    const unsigned d = pi.dimension();
    for (unsigned i = 0; i < d; ++i) {
        for (unsigned j = i + 1; j < d; ++j) {
            for (unsigned k = j + 1; k < d; ++k) {
                auto r = jacobiator(pi, i, j, k);
                if (!r.is_zero()) {
                    return {false, std::array{i, j, k}, std::move(r)};
                }
            }
        }
    }
    return {true, std::nullopt, PhasePoly(d)};
}

SprayField spray(const PoissonStructure &pi, int sign)
{
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("spray: sign must be +1 or -1");
    }
    const unsigned d = pi.dimension();
    SprayField field{d, sign, {}};
    for (unsigned j = 0; j < d; ++j) {
        PhasePoly c(d);
        for (unsigned i = 0; i < d; ++i) {
            c += pi.entry(i, j) * PhasePoly::p(d, i);
        }
        field.components.push_back(sign < 0 ? -c : c);
    }
    return field;
}

PhasePoly lie_derivative(const SprayField &field, const PhasePoly &f)
{
    PhasePoly acc(field.dimension);
    for (unsigned j = 0; j < field.dimension; ++j) {
        if (!field.components[j].is_zero()) {
            acc += field.components[j] * f.partial(Var::x(j));
        }
    }
    return acc;
}

} // namespace symreal
