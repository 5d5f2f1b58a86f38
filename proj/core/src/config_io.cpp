#include "mikado/config_io.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <fstream>
#include <numeric>

namespace mikado {

using nlohmann::json;
using Rational = boost::multiprecision::cpp_rational;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot open " + path});
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError({path + ": " + e.what()});
  }
}

CoxeterSystem system_from_json(const json& j) {
  std::vector<std::string> bad;
  if (!j.is_object()) throw ConfigError({"system config must be a JSON object"});

  std::string name = j.value("name", std::string("unnamed"));
  std::vector<std::string> gens;
  if (!j.contains("generators") || !j["generators"].is_array())
    bad.push_back("'generators' must be an array of names");
  else
    for (const auto& g : j["generators"])
      gens.push_back(g.is_string() ? g.get<std::string>() : std::string());

  auto read_label = [&bad](const json& cell) -> int {
    if (cell.is_string()) {
      if (cell.get<std::string>() == "inf") return 0;
      bad.push_back("bond label '" + cell.get<std::string>() +
                    "' is not a number or \"inf\"");
      return 2;
    }
    if (!cell.is_number_integer()) {
      bad.push_back("bond label must be an integer or \"inf\"");
      return 2;
    }
    return cell.get<int>();
  };

  std::vector<std::vector<int>> cox;
  if (!j.contains("coxeter_matrix") || !j["coxeter_matrix"].is_array())
    bad.push_back("'coxeter_matrix' must be a square array");
  else
    for (const auto& row : j["coxeter_matrix"]) {
      cox.emplace_back();
      for (const auto& cell : row) cox.back().push_back(read_label(cell));
    }

  std::optional<std::vector<std::vector<Int>>> cartan;
  if (j.contains("cartan")) {
    cartan.emplace();
    for (const auto& row : j["cartan"]) {
      cartan->emplace_back();
      for (const auto& cell : row) {
        if (!cell.is_number_integer())
          bad.push_back("cartan entries must be integers");
        else
          cartan->back().push_back(cell.get<Int>());
      }
    }
  }

  if (!bad.empty()) throw ConfigError(std::move(bad));
  return make_system(std::move(name), std::move(gens), std::move(cox),
                     std::move(cartan));
}

namespace {

Rational rational_from_json(const json& cell) {
  if (cell.is_number_integer()) return Rational(cell.get<std::int64_t>());
  if (cell.is_string()) {
    const std::string s = cell.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(Coeff(s));
      return Rational(Coeff(s.substr(0, slash)), Coeff(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw ConfigError({"'" + s + "' is not a rational number"});
    }
  }
  throw ConfigError({"covector entries must be integers or \"p/q\" strings"});
}

}  // namespace

BiclosedSet biclosed_from_json(const CoxeterSystem& sys, const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "empty") return BiclosedSet::empty(sys);
    if (s == "all") return BiclosedSet::all(sys);
    throw ConfigError({"unknown biclosed shorthand '" + s +
                       "' (use \"empty\", \"all\", or an object)"});
  }
  if (!j.is_object() || !j.contains("type"))
    throw ConfigError({"biclosed set config must be an object with 'type'"});
  const std::string type = j["type"].get<std::string>();

  if (type == "inversion") {
    if (!j.contains("element"))
      throw ConfigError({"inversion set needs 'element'"});
    return BiclosedSet::inversion(
        sys, parse_element(sys, j["element"].get<std::string>()));
  }
  if (type == "complement") {
    if (!j.contains("of")) throw ConfigError({"complement needs 'of'"});
    return BiclosedSet::complement(biclosed_from_json(sys, j["of"]));
  }
  if (type == "halfspace") {
    if (!j.contains("covector") || !j["covector"].is_array() ||
        static_cast<int>(j["covector"].size()) != sys.rank)
      throw ConfigError({"halfspace needs a 'covector' of length " +
                         std::to_string(sys.rank)});
    std::vector<Rational> vals;
    for (const auto& cell : j["covector"]) vals.push_back(rational_from_json(cell));
    Coeff lcm = 1;
    for (const auto& r : vals)
      lcm = boost::multiprecision::lcm(lcm, Coeff(denominator(r)));
    std::vector<Coeff> cleared;
    for (const auto& r : vals)
      cleared.push_back(Coeff(numerator(r)) * (lcm / Coeff(denominator(r))));
    return BiclosedSet::half_space(std::move(cleared));
  }
  if (type == "explicit") {
    if (!j.contains("roots") || !j["roots"].is_array())
      throw ConfigError({"explicit set needs 'roots'"});
    if (!j.contains("certified_depth"))
      throw ConfigError({"explicit set needs 'certified_depth'"});
    std::vector<Root> roots;
    for (const auto& row : j["roots"]) {
      Root r;
      for (const auto& cell : row) r.push_back(cell.get<Int>());
      if (static_cast<int>(r.size()) != sys.rank)
        throw ConfigError({"root " + format_root(r) + " has wrong dimension"});
      roots.push_back(std::move(r));
    }
    return BiclosedSet::explicit_on_ball(sys, std::move(roots),
                                         j["certified_depth"].get<int>());
  }
  throw ConfigError({"unknown biclosed type '" + type + "'"});
}

SweepSpec sweep_from_json(const CoxeterSystem& sys, const json& j) {
  SweepSpec spec;
  spec.radius = j.value("radius", 2);
  spec.jobs = j.value("jobs", 1);
  spec.family_inversions = false;

  if (j.contains("biclosed")) {
    for (const auto& item : j["biclosed"]) {
      if (item.is_string() && item.get<std::string>() == "inversions")
        spec.family_inversions = true;
      else if (item.is_string() && item.get<std::string>() == "complements")
        spec.family_complements = true;
      else
        spec.extra_sets.push_back(biclosed_from_json(sys, item));
    }
  } else {
    spec.family_inversions = true;
  }

  if (!j.contains("statements") || !j["statements"].is_array() ||
      j["statements"].empty())
    throw ConfigError({"sweep spec needs a nonempty 'statements' array"});
  for (const auto& item : j["statements"]) {
    if (item.is_string()) {
      spec.statements.push_back(item.get<std::string>());
    } else if (item.is_object() && item.contains("id")) {
      spec.statements.push_back(item["id"].get<std::string>());
      if (item.contains("limit"))
        spec.limits[spec.statements.back()] = item["limit"].get<int>();
    } else {
      throw ConfigError({"statement entries must be ids or {id, limit}"});
    }
  }
  for (const auto& id : spec.statements)
    if (std::find(statement_ids().begin(), statement_ids().end(), id) ==
        statement_ids().end())
      throw ConfigError({"unknown statement id '" + id + "'"});
  return spec;
}

}  // namespace mikado
