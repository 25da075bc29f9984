#include "surface_input.hpp"

#include <set>

#include <json.hpp>

namespace g1k::tools {

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw error(where + " must be an integer or a \"num/den\" string");
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw error("unknown key \"" + key + "\" in " + where);
  }
}

std::vector<std::pair<int, std::vector<Rational>>> parse_tail(const json& j,
                                                              const std::string& where) {
  std::vector<std::pair<int, std::vector<Rational>>> out;
  if (!j.is_array()) throw error(where + " must be an array");
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_array()) {
      throw error(where + " entries must have the shape [degree, [[i, j, coeff], ...]]");
    }
    const int degree = entry[0].get<int>();
    if (degree < 0 || degree > 64) {
      throw not_alexander_form(where + " has a part of invalid degree " + std::to_string(degree));
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, Rational(0));
    for (const auto& mono : entry[1]) {
      if (!mono.is_array() || mono.size() != 3 || !mono[0].is_number_integer() ||
          !mono[1].is_number_integer()) {
        throw error(where + " monomials must have the shape [i, j, coeff]");
      }
      const int i = mono[0].get<int>();
      const int jj = mono[1].get<int>();
      if (i < 0 || jj < 0 || i + jj != degree) {
        throw not_alexander_form(where + " monomial ua^" + std::to_string(i) + "*ub^" +
                                 std::to_string(jj) + " does not have degree " +
                                 std::to_string(degree));
      }
      coeffs[static_cast<std::size_t>(i)] = rational_field(mono[2], where + " coefficient");
    }
    out.emplace_back(degree, std::move(coeffs));
  }
  return out;
}

}  // namespace

SurfaceInput parse_surface_input(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw error("surface document must be a JSON object");
  reject_unknown_keys(j, {"h1", "abc", "ell", "lambda", "series", "orders", "strict_odd"},
                      "surface document");
  for (const char* required : {"h1", "abc", "ell", "lambda", "series"}) {
    if (!j.contains(required)) throw error(std::string("missing key \"") + required + "\"");
  }

  AlexFormData d;
  if (!j["h1"].is_number_integer()) throw error("h1 must be an integer");
  d.h1 = j["h1"].get<long long>();
  d.ell = rational_field(j["ell"], "ell");

  const json& lam = j["lambda"];
  if (!lam.is_object()) throw error("lambda must be an object");
  reject_unknown_keys(lam, {"A", "B", "C", "E"}, "lambda");
  for (const char* required : {"A", "B", "C", "E"}) {
    if (!lam.contains(required)) throw error(std::string("missing key lambda.") + required);
  }
  d.lA = rational_field(lam["A"], "lambda.A");
  d.lB = rational_field(lam["B"], "lambda.B");
  d.lC = rational_field(lam["C"], "lambda.C");
  d.lE = rational_field(lam["E"], "lambda.E");

  const json& series = j["series"];
  if (!series.is_object()) throw error("series must be an object");
  reject_unknown_keys(series, {"cap", "even_tail", "gamma_tail"}, "series");
  if (!series.contains("cap") || !series["cap"].is_number_integer()) {
    throw error("series.cap must be an integer");
  }
  d.cap = series["cap"].get<int>();
  if (series.contains("even_tail")) d.even_tail = parse_tail(series["even_tail"], "even_tail");
  if (series.contains("gamma_tail")) d.gamma_tail = parse_tail(series["gamma_tail"], "gamma_tail");

  if (j.contains("orders")) {
    const json& orders = j["orders"];
    if (!orders.is_array() || orders.size() != 3) throw error("orders must be [O_A, O_B, O_C]");
    for (int i = 0; i < 3; ++i) {
      if (!orders[i].is_number_integer()) throw error("orders must be integers");
      d.orders[static_cast<std::size_t>(i)] = orders[i].get<long long>();
    }
  }

  bool strict = true;
  if (j.contains("strict_odd")) {
    if (!j["strict_odd"].is_boolean()) throw error("strict_odd must be a boolean");
    strict = j["strict_odd"].get<bool>();
  }

  const json& abc = j["abc"];
  if (!abc.is_array() || abc.size() != 3) throw error("abc must be [a, b, c]");
  SurfaceTriple triple(rational_field(abc[0], "abc[0]"), rational_field(abc[1], "abc[1]"),
                       rational_field(abc[2], "abc[2]"), strict);

  d.validate();
  return SurfaceInput(std::move(d), std::move(triple));
}

}  // namespace g1k::tools
