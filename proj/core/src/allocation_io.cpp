#include "sumsym/allocation_io.hpp"

#include "sumsym/errors.hpp"

#include <json.hpp>

#include <initializer_list>
#include <string>

namespace sumsym {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string at(std::string_view source, const std::string& path) { return std::string(source) + ": " + path + ": "; }

json parse_document(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(source) + ": malformed JSON: " + e.what());
  }
}

void require_object(const json& j, std::string_view source, const std::string& path,
                    std::initializer_list<std::string_view> required,
                    std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) throw ParseError(at(source, path) + "expected an object");
  for (auto key : required) {
    if (!j.contains(key)) throw ParseError(at(source, path) + "missing field '" + std::string(key) + "'");
  }
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (auto k : required) known = known || key == k;
    for (auto k : optional) known = known || key == k;
    if (!known) throw ParseError(at(source, path) + "unknown field '" + key + "'");
  }
}

Rational rational_field(const json& j, std::string_view source, const std::string& path) {
  if (!j.is_string()) {
    throw ParseError(at(source, path) + "expected a string holding an exact rational literal such as \"3/2\"" +
                     (j.is_number_float() ? " (floating-point values are not accepted)" : ""));
  }
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(at(source, path) + e.what());
  }
}

std::size_t count_field(const json& j, std::string_view source, const std::string& path) {
  if (!j.is_number_unsigned()) throw ParseError(at(source, path) + "expected a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

Scenario parse_scenario_json(std::string_view text, std::string_view source) {
  const json doc = parse_document(text, source);
  require_object(doc, source, "scenario", {"items", "treatments"});
  if (!doc["items"].is_array()) throw ParseError(at(source, "items") + "expected an array");
  if (!doc["treatments"].is_array()) throw ParseError(at(source, "treatments") + "expected an array");

  Scenario sc;
  for (std::size_t x = 0; x < doc["items"].size(); ++x) {
    const auto path = "items[" + std::to_string(x) + "]";
    const auto& item = doc["items"][x];
    require_object(item, source, path, {"id", "f"});
    if (!item["id"].is_string() || item["id"].get<std::string>().empty()) {
      throw ParseError(at(source, path + ".id") + "expected a nonempty string");
    }
    sc.items.push_back({item["id"].get<std::string>(), rational_field(item["f"], source, path + ".f")});
  }
  for (std::size_t i = 0; i < doc["treatments"].size(); ++i) {
    const auto path = "treatments[" + std::to_string(i) + "]";
    const auto& t = doc["treatments"][i];
    require_object(t, source, path, {"potency", "quota"});
    sc.treatments.push_back(
        {rational_field(t["potency"], source, path + ".potency"), count_field(t["quota"], source, path + ".quota")});
  }
  return sc;
}

AllocationClaim parse_allocation_json(std::string_view text, std::string_view source) {
  const json doc = parse_document(text, source);
  require_object(doc, source, "allocation", {"assignment"},
                 {"class_sizes", "class_masses", "score", "approximate_score"});
  if (!doc["assignment"].is_object()) throw ParseError(at(source, "assignment") + "expected an object");

  AllocationClaim claim;
  for (const auto& [id, treatment] : doc["assignment"].items()) {
    const auto path = "assignment." + id;
    if (!treatment.is_number_unsigned() || treatment.get<std::size_t>() == 0) {
      throw ParseError(at(source, path) + "expected a 1-based treatment index");
    }
    claim.assignment.emplace(id, treatment.get<std::size_t>());
  }
  if (doc.contains("score")) {
    if (!doc["score"].is_string()) throw ParseError(at(source, "score") + "expected a string");
    claim.score = doc["score"].get<std::string>();
  }
  return claim;
}

std::string format_allocation_json(const Scenario& sc, const Allocation& a, bool approximate_score) {
  ordered_json out;
  ordered_json assignment = ordered_json::object();
  for (std::size_t x = 0; x < sc.items.size(); ++x) assignment[sc.items[x].id] = a.classes[x] + 1;
  out["assignment"] = std::move(assignment);
  out["class_sizes"] = a.class_sizes;
  ordered_json masses = ordered_json::array();
  for (const auto& m : a.class_masses) masses.push_back(m.str());
  out["class_masses"] = std::move(masses);
  out["score"] = a.score.str();
  if (approximate_score) out["approximate_score"] = "~" + approximate_decimal(a.score, 12);
  return out.dump(2) + "\n";
}

std::string approximate_decimal(const Rational& v, unsigned digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const mpz_class num = abs(v.mpq().get_num());
  const mpz_class& den = v.mpq().get_den();
  // round(|v| * 10^digits), half away from zero
  mpz_class scaled = (2 * num * scale + den) / (2 * den);
  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  const bool negative = v.sign() < 0 && scaled != 0;
  return (negative ? "-" : "") + body;
}

}  // namespace sumsym
