#include <random>

#include <doctest.h>

#include <symreal/errors.hpp>
#include <symreal/karasev.hpp>
#include <symreal/poisson.hpp>
#include <symreal/serialize.hpp>

#include "support/fixtures.hpp"

using namespace symreal;
using namespace symreal::testing;

TEST_CASE("poly records round-trip")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned d = 1 + trial % 3;
        const auto p = random_poly(rng, d, 6, 3);
        CHECK(poly_from_records(poly_to_records(p), d) == p);
    }
}

TEST_CASE("poly records keep signs and reduce fractions")
{
    const auto p = xv(2, 1) * q(-3, 6) + pv(2, 2) * q(4);
    const auto text = poly_to_records(p);
    CHECK(text.find("\"-1/2\"") != std::string::npos);
    CHECK(text.find("\"4/1\"") != std::string::npos);
    CHECK(poly_from_records(text, 2) == p);
}

TEST_CASE("zero polynomial serializes as an empty array")
{
    CHECK(poly_to_records(PhasePoly(2)) == "[]");
    CHECK(poly_from_records("[]", 2).is_zero());
}

TEST_CASE("x-only records are accepted only when allowed")
{
    const std::string rec = R"([{"coeff": "2/3", "exps": [1, 2]}])";
    CHECK(poly_from_records(rec, 2, true) == xv(2, 1) * xv(2, 2) * xv(2, 2) * q(2, 3));
    CHECK_THROWS_AS(poly_from_records(rec, 2, false), FormatError);
}

TEST_CASE("integer coefficients are accepted")
{
    CHECK(poly_from_records(R"([{"coeff": -2, "exps": [1, 0]}])", 1) == xv(1, 1) * q(-2));
}

TEST_CASE("malformed records are rejected")
{
    CHECK_THROWS_AS(poly_from_records("not json", 1), FormatError);
    CHECK_THROWS_AS(poly_from_records(R"([{"coeff": "1/0", "exps": [0, 0]}])", 1), FormatError);
    CHECK_THROWS_AS(poly_from_records(R"([{"coeff": 1.5, "exps": [0, 0]}])", 1), FormatError);
    CHECK_THROWS_AS(poly_from_records(R"([{"coeff": "1/1", "exps": [0]}])", 1), FormatError);
    CHECK_THROWS_AS(poly_from_records(R"([{"coeff": "1/1", "exps": [-1, 0]}])", 1), FormatError);
    CHECK_THROWS_AS(poly_from_records(R"({"coeff": "1/1"})", 1), FormatError);
}

TEST_CASE("series documents round-trip for every map")
{
    for (const auto &[name, pi] : battery()) {
        CAPTURE(name);
        for (const auto &r : {source_series(pi, 4), target_series(pi, 4), karasev_series(pi, 4)}) {
            const auto doc = series_document(r);
            const auto back = parse_series_document(doc);
            CHECK(back.kind == r.kind);
            CHECK(back.series == r.series);
            CHECK(series_document(back) == doc);
        }
    }
}

TEST_CASE("series documents with missing fields are rejected")
{
    CHECK_THROWS_AS(parse_series_document("{}"), FormatError);
    CHECK_THROWS_AS(parse_series_document(R"({"dimension": 1, "order": 1, "map": "sideways", "coefficients": []})"),
                    FormatError);
    CHECK_THROWS_AS(
        parse_series_document(
            R"({"dimension": 1, "order": 1, "map": "source", "coefficients": [{"order": 2, "component": 1, "poly": []}]})"),
        FormatError);
}
