#include "agtaut/serialize.hpp"

#include <stdexcept>

namespace agtaut {

namespace {

Rational rational_field(Json const& j, char const* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw std::invalid_argument(std::string("JSON field '") + key + "' must be a \"p/q\" string");
  }
  return Rational::parse(j.at(key).get<std::string>());
}

unsigned unsigned_field(Json const& j, char const* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
    throw std::invalid_argument(std::string("JSON field '") + key +
                                "' must be a non-negative integer");
  }
  return j.at(key).get<unsigned>();
}

}  // namespace

Json to_json(TautClass const& c) {
  Json terms = Json::array();
  for (auto const& [s, coeff] : c.terms()) {
    terms.push_back({{"indices", set_indices(s)}, {"coeff", coeff.str()}});
  }
  return {{"g", c.genus()}, {"terms", terms}};
}

TautClass taut_class_from_json(Json const& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("tautological class JSON must be an object");
  }
  unsigned g = unsigned_field(j, "g");
  if (g < 1 || g > kMaxGenus) {
    throw std::invalid_argument("JSON genus out of range");
  }
  if (!j.contains("terms") || !j.at("terms").is_array()) {
    throw std::invalid_argument("JSON field 'terms' must be an array");
  }
  TautClass out(g);
  for (auto const& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("indices") || !t.at("indices").is_array()) {
      throw std::invalid_argument("each term needs an 'indices' array");
    }
    std::vector<unsigned> indices;
    for (auto const& i : t.at("indices")) {
      if (!i.is_number_unsigned()) {
        throw std::invalid_argument("indices must be positive integers");
      }
      indices.push_back(i.get<unsigned>());
    }
    out += TautClass::basis(g, indices, rational_field(t, "coeff"));
  }
  return out;
}

Json to_json(QSeries const& s) {
  Json coeffs = Json::array();
  for (auto const& c : s.coeffs()) {
    coeffs.push_back(c.str());
  }
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(Json const& j) {
  unsigned order = unsigned_field(j, "order");
  if (!j.contains("coeffs") || !j.at("coeffs").is_array()) {
    throw std::invalid_argument("JSON field 'coeffs' must be an array");
  }
  std::vector<Rational> coeffs;
  for (auto const& c : j.at("coeffs")) {
    if (!c.is_string()) {
      throw std::invalid_argument("coefficients must be \"p/q\" strings");
    }
    coeffs.push_back(Rational::parse(c.get<std::string>()));
  }
  return QSeries(order, std::move(coeffs));
}

Json to_json(DegreeResult const& r) {
  return {{"degree", r.value.str()}, {"route", std::string(route_name(r.route))}};
}

DegreeResult degree_from_json(Json const& j) {
  Rational value = rational_field(j, "degree");
  if (!j.contains("route") || !j.at("route").is_string()) {
    throw std::invalid_argument("JSON field 'route' must be a string");
  }
  return {value, parse_route(j.at("route").get<std::string>())};
}

Json to_json(GWPrediction const& p) {
  return {{"g", p.g},
          {"d", p.d},
          {"i", p.i},
          {"insertion", p.insertion},
          {"value", p.value.str()}};
}

}  // namespace agtaut
