#include "hhodge/cli/render.hpp"

namespace hhodge::cli {

nlohmann::json rational_json(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return {{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
}

std::string render_rational(const Rational& q, Format format) {
  if (format == Format::Json) return rational_json(q).dump();
  return to_string(q);
}

nlohmann::json series_json(const BivariateSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (int j = 0; j <= s.order(); ++j) {
    for (const auto& [l, c] : s[j].terms()) terms.push_back({{"t", j}, {"z", l}, {"coeff", rational_json(c)}});
  }
  return terms;
}

}  // namespace hhodge::cli
