#pragma once

// JSON forms of relations, expansions and lattices (schema 1).

#include <string>
#include <vector>

#include <json.hpp>

#include "smt/hibi.hpp"
#include "smt/straighten.hpp"

namespace smt {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const Shape& s) { return Json{{"n", s.n}, {"m", s.m}, {"q", s.q}}; }

inline Json to_json(const GenMonomial& M) {
  Json out = Json::array();
  for (auto& x : M.factors()) out.push_back(x.to_string());
  return out;
}

inline Json to_json(const Expansion& e) {
  Json out = Json::array();
  for (auto& t : e) out.push_back(Json{{"coeff", to_fraction_string(t.coeff)}, {"monomial", to_json(t.monomial)}});
  return out;
}

inline Json to_json(const Relation& r) {
  return Json{{"lhs", Json::array({r.x.to_string(), r.y.to_string()})}, {"family", r.family}, {"rhs", to_json(r.rhs)}};
}

inline Relation relation_from_json(const Json& j, const Shape& s) {
  try {
    Relation r;
    r.x = parse_element(j.at("lhs").at(0).get<std::string>(), s);
    r.y = parse_element(j.at("lhs").at(1).get<std::string>(), s);
    r.family = j.at("family").get<int>();
    for (auto& t : j.at("rhs")) {
      std::vector<DElement> f;
      for (auto& x : t.at("monomial")) f.push_back(parse_element(x.get<std::string>(), s));
      r.rhs.push_back({parse_rational(t.at("coeff").get<std::string>()), GenMonomial(s, Mode::RD, std::move(f))});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed relation: ") + e.what());
  }
}

/// Every straightening relation of D for the shape, in element order, R(D) form.
inline Json relations_json(const Straightener& st) {
  Json rels = Json::array();
  for (auto& [x, y] : incomparable_pairs(st.shape())) rels.push_back(to_json(st.relation(x, y)));
  return Json{{"schema", kSchemaVersion}, {"shape", to_json(st.shape())}, {"mode", "RD"}, {"relations", std::move(rels)}};
}

inline std::vector<Relation> relations_from_json(const Json& j, const Shape& s) {
  std::vector<Relation> out;
  try {
    if (j.at("schema").get<int>() != kSchemaVersion) throw ParseError("unsupported schema");
    for (auto& r : j.at("relations")) out.push_back(relation_from_json(r, s));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed relation file: ") + e.what());
  }
  return out;
}

/// {"schema":1,"elements":[...],"covers":[[lower,upper],...]}
inline Json lattice_to_json(const FiniteLattice& L) {
  Json covers = Json::array();
  for (auto [lo, hi] : L.poset().cover_pairs()) covers.push_back(Json::array({lo, hi}));
  return Json{{"schema", kSchemaVersion}, {"elements", L.labels()}, {"covers", std::move(covers)}};
}

inline FiniteLattice lattice_from_json(const Json& j) {
  try {
    if (j.at("schema").get<int>() != kSchemaVersion) throw ParseError("unsupported schema");
    auto labels = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (auto& c : j.at("covers")) covers.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
    return FiniteLattice(FinitePoset::from_covers(labels.size(), covers), labels);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed lattice: ") + e.what());
  }
}

}  // namespace smt
