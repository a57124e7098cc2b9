#include "qblocks/json_io.hpp"

#include <fstream>
#include <set>

#include "qblocks/errors.hpp"

namespace qblocks {

namespace {

std::set<std::string> symbols_of(const Weight& w) {
  std::set<std::string> out;
  for (const auto& c : w.coords()) {
    for (const auto& [name, coef] : c.irrational_part()) out.insert(name);
  }
  return out;
}

Json matrix_json(const std::vector<std::vector<int>>& m) {
  Json rows = Json::array();
  for (const auto& row : m) rows.push_back(row);
  return rows;
}

}  // namespace

Weight weight_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coords") || !j["coords"].is_array()) {
    throw ParseError("weight JSON needs an object with a \"coords\" array");
  }
  std::vector<Scalar> coords;
  for (const auto& c : j["coords"]) {
    if (!c.is_string()) throw ParseError("weight coordinates must be scalar strings");
    coords.push_back(Scalar::parse(c.get<std::string>()));
  }
  if (coords.empty()) throw ParseError("weight JSON has no coordinates");
  if (j.contains("n")) {
    if (!j["n"].is_number_integer() || j["n"].get<long>() != static_cast<long>(coords.size())) {
      throw ParseError("weight JSON: \"n\" does not match the number of coordinates");
    }
  }
  Weight w(coords);
  if (j.contains("symbols")) {
    if (!j["symbols"].is_array()) throw ParseError("\"symbols\" must be an array of names");
    std::set<std::string> declared;
    for (const auto& s : j["symbols"]) {
      if (!s.is_string()) throw ParseError("\"symbols\" must be an array of names");
      Scalar::symbol(s.get<std::string>());
      declared.insert(s.get<std::string>());
    }
    for (const auto& name : symbols_of(w)) {
      if (!declared.contains(name)) throw ParseError("symbol '" + name + "' is not declared in \"symbols\"");
    }
  }
  return w;
}

Json weight_to_json(const Weight& w) {
  Json j;
  j["n"] = w.n();
  j["coords"] = Json::array();
  for (const auto& c : w.coords()) j["coords"].push_back(c.str());
  const auto symbols = symbols_of(w);
  if (!symbols.empty()) j["symbols"] = symbols;
  return j;
}

Weight read_weight_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read weight file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("weight file '" + path + "' is not valid JSON: " + e.what());
  }
  return weight_from_json(j);
}

Json witness_to_json(const LinkageWitness& w) {
  Json j;
  j["w"] = w.w;
  j["pairs"] = Json::array();
  for (const auto& p : w.pairs) j["pairs"].push_back({{"i", p.alpha.i}, {"j", p.alpha.j}, {"k", p.k.str()}});
  return j;
}

LinkageWitness witness_from_json(const Json& j) {
  try {
    LinkageWitness w;
    w.w = j.at("w").get<Permutation>();
    for (const auto& p : j.at("pairs")) {
      w.pairs.push_back({{p.at("i").get<int>(), p.at("j").get<int>()}, Scalar::parse(p.at("k").get<std::string>())});
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed witness JSON: ") + e.what());
  }
}

Json wt_to_json(const WtVector& v) {
  Json j = Json::object();
  for (const auto& [a, c] : v.terms()) j[std::to_string(a)] = c;
  return j;
}

Json reduction_to_json(const ReductionResult& r) {
  Json j;
  j["levi"] = Json::array();
  for (const auto& f : r.levi) {
    Json fj{{"size", f.size}, {"kind", std::string(kind_name(f.cls.kind))}, {"s", f.cls.label()}, {"ell", f.ell}};
    j["levi"].push_back(fj);
  }
  j["levi_sizes"] = Json::array();
  for (const auto& f : r.levi) j["levi_sizes"].push_back(f.size);
  j["reduced"] = weight_to_json(r.reduced);
  j["moves"] = Json::array();
  for (const auto& m : r.moves) {
    j["moves"].push_back({{"root", m.alpha.str()}, {"i", m.alpha.i}, {"kind", std::string(move_kind_name(m.kind))}});
  }
  j["parity_undetermined"] = r.parity_undetermined;
  j["notes"] = r.notes;
  return j;
}

Json character_to_json(const FormalCharacter& ch) {
  Json j;
  j["anchor"] = weight_to_json(ch.anchor());
  if (ch.is_exact()) {
    j["depth"] = "exact";
  } else {
    j["depth"] = ch.depth();
  }
  j["terms"] = Json::array();
  for (const auto& [mu, c] : ch.weighted_terms()) {
    Json t;
    t["weight"] = Json::array();
    for (const auto& x : mu.coords()) t["weight"].push_back(x.str());
    t["coefficient"] = c;
    j["terms"].push_back(t);
  }
  return j;
}

Json chart_to_json(const BlockChart& chart) {
  Json j;
  j["center"] = weight_to_json(chart.center);
  j["s"] = chart.s.str();
  j["ell"] = chart.ell;
  j["window"] = chart.window;
  j["weights"] = Json::array();
  for (int i = -chart.window; i <= chart.window; ++i) {
    j["weights"].push_back({{"i", i}, {"weight", weight_to_json(chart.at(i))}});
  }
  j["D"] = matrix_json(chart.D);
  j["C"] = matrix_json(chart.C);
  j["edges"] = Json::array();
  for (const auto& [a, b] : chart.edges) j["edges"].push_back({a, b});
  j["boundary"] = chart.boundary;
  return j;
}

Json gl_to_json(const GlWeight& nu) {
  return Json{{"ell", nu.ell}, {"coords", nu.coords}, {"rho", gl_rho(nu.n(), nu.ell)}};
}

Json comparison_to_json(const ChartComparison& c) {
  Json j;
  j["passed"] = c.passed();
  j["checks"] = Json::array();
  for (const auto& check : c.checks) {
    j["checks"].push_back({{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
  }
  j["notes"] = c.notes;
  return j;
}

}  // namespace qblocks
