#pragma once

#include "hhodge/rational.hpp"
#include "hhodge/series.hpp"

#include <json.hpp>

#include <string>

namespace hhodge::cli {

enum class Format { Plain, Json };

/// Plain: "p/q" in lowest terms, integers without a denominator.
/// Json: {"num":"p","den":"q"} with decimal strings.
std::string render_rational(const Rational& q, Format format);

nlohmann::json rational_json(const Rational& q);

/// [{"t": j, "z": l, "coeff": {...}}, ...] in (j, l) order.
nlohmann::json series_json(const BivariateSeries& s);

}  // namespace hhodge::cli
