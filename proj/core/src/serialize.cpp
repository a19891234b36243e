#include <string>

#include <json.hpp>

#include <symreal/errors.hpp>
#include <symreal/serialize.hpp>

namespace symreal
{

namespace
{

using nlohmann::json;

json records_json(const PhasePoly &poly)
{
    json arr = json::array();
    for (const auto &[e, c] : poly.terms()) {
        arr.push_back({{"coeff", c.to_string()}, {"exps", e}});
    }
    return arr;
}

Rational coeff_from_json(const json &j)
{
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception &e) {
            throw FormatError(std::string("bad coefficient: ") + e.what());
        }
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw FormatError("coefficient must be a \"num/den\" string or an integer");
}

PhasePoly records_from_json(const json &arr, unsigned dim, bool allow_x_only)
{
    if (!arr.is_array()) {
        throw FormatError("polynomial must be an array of {coeff, exps} records");
    }
    PhasePoly poly(dim);
    for (const auto &rec : arr) {
        if (!rec.is_object() || !rec.contains("coeff") || !rec.contains("exps") || !rec["exps"].is_array()) {
            throw FormatError("polynomial record needs 'coeff' and an 'exps' array");
        }
        const auto &ex = rec["exps"];
        if (ex.size() != 2 * dim && !(allow_x_only && ex.size() == dim)) {
            throw FormatError("exponent array has length " + std::to_string(ex.size()) + ", expected "
                              + (allow_x_only ? std::to_string(dim) + " or " : std::string()) + std::to_string(2 * dim));
        }
        Exponents e(2 * dim, 0);
        for (std::size_t k = 0; k < ex.size(); ++k) {
            if (!ex[k].is_number_unsigned()) {
                throw FormatError("exponents must be non-negative integers");
            }
            e[k] = ex[k].get<std::uint32_t>();
        }
        poly.add_term(e, coeff_from_json(rec["coeff"]));
    }
    return poly;
}

json parse_or_throw(std::string_view text, const char *what)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

} // namespace

std::string poly_to_records(const PhasePoly &poly)
{
    return records_json(poly).dump();
}

PhasePoly poly_from_records(std::string_view text, unsigned dim, bool allow_x_only)
{
    return records_from_json(parse_or_throw(text, "polynomial"), dim, allow_x_only);
}

std::string series_document(const RealizationSeries &r)
{
    const auto &s = r.series;
    json coeffs = json::array();
    for (unsigned n = 0; n <= s.max_order(); ++n) {
        for (unsigned i = 0; i < s.dimension(); ++i) {
            coeffs.push_back({{"order", n}, {"component", i + 1}, {"poly", records_json(s.coefficient(n, i))}});
        }
    }
    json doc = {{"dimension", s.dimension()},
                {"order", s.max_order()},
                {"map", std::string(to_string(r.kind))},
                {"coefficients", std::move(coeffs)}};
    return doc.dump(2) + "\n";
}

RealizationSeries parse_series_document(std::string_view text)
{
    const json doc = parse_or_throw(text, "series document");
    if (!doc.is_object()) {
        throw FormatError("series document must be an object");
    }
    for (const char *key : {"dimension", "order", "map", "coefficients"}) {
        if (!doc.contains(key)) {
            throw FormatError(std::string("series document: missing '") + key + "'");
        }
    }
    if (!doc["dimension"].is_number_unsigned() || !doc["order"].is_number_unsigned() || !doc["map"].is_string()
        || !doc["coefficients"].is_array()) {
        throw FormatError("series document: field types are wrong");
    }
    const auto dim = doc["dimension"].get<unsigned>();
    const auto order = doc["order"].get<unsigned>();
    if (dim == 0) {
        throw FormatError("series document: dimension must be positive");
    }
    RealizationSeries r;
    try {
        r.kind = series_kind_from_string(doc["map"].get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
    r.series = FormalSeries(dim, order);
    for (const auto &c : doc["coefficients"]) {
        if (!c.is_object() || !c.contains("order") || !c.contains("component") || !c.contains("poly")) {
            throw FormatError("series document: coefficient needs 'order', 'component' and 'poly'");
        }
        const auto n = c["order"].get<unsigned>();
        const auto comp = c["component"].get<unsigned>();
        if (n > order || comp == 0 || comp > dim) {
            throw FormatError("series document: coefficient index out of range");
        }
        r.series.set(n, comp - 1, records_from_json(c["poly"], dim, false));
    }
    return r;
}

} // namespace symreal
