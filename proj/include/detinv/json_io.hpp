#pragma once

#include "detinv/betti.hpp"
#include "detinv/homology.hpp"
#include "detinv/ideal.hpp"
#include "detinv/loccoh.hpp"
#include "detinv/numeric.hpp"
#include "detinv/partition.hpp"
#include "detinv/schur.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace detinv::json_io {

using nlohmann::json;

/// Integers that fit in 64 bits are written as JSON numbers, larger ones as decimal strings.
inline json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

inline json partition(const Partition& x) { return json(x.parts()); }

inline Partition partition_from(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array of integers");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("partition entries must be integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

inline json weight(const DominantWeight& w) { return json(w.entries()); }

/// {"m":int,"n":int,"gens":[[...],...]}, generators in canonical order.
inline json ideal(const InvariantIdeal& a) {
  json gens = json::array();
  for (const auto& x : a.gens()) gens.push_back(partition(x));
  return json{{"m", a.context().m}, {"n", a.context().n}, {"gens", gens}};
}

/// Raw fields of an ideal document; m and n are not yet checked against m >= n.
struct IdealDocument {
  int m = 0;
  int n = 0;
  std::vector<Partition> gens;
};

inline IdealDocument ideal_document_from(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("gens"))
    throw std::invalid_argument(R"(ideal JSON needs fields "m", "n" and "gens")");
  IdealDocument doc;
  doc.m = j.at("m").get<int>();
  doc.n = j.at("n").get<int>();
  if (!j.at("gens").is_array()) throw std::invalid_argument(R"("gens" must be an array of partitions)");
  for (const auto& g : j.at("gens")) doc.gens.push_back(partition_from(g));
  return doc;
}

inline InvariantIdeal ideal_from(const json& j) {
  auto doc = ideal_document_from(j);
  return make_ideal(MatrixContext(doc.m, doc.n), std::move(doc.gens));
}

inline json zpairs(const std::vector<ZPair>& pairs) {
  json out = json::array();
  for (const auto& zp : pairs) out.push_back(json{{"z", partition(zp.z)}, {"l", zp.l}});
  return out;
}

inline json terms(const std::vector<IrredTerm>& ts) {
  json out = json::array();
  for (const auto& t : ts)
    out.push_back(json{{"wm", weight(t.wm)}, {"wn", weight(t.wn)}, {"deg", t.degree}, {"mult", big(t.multiplicity)}});
  return out;
}

/// One report per cohomological index: {"j":int,"terms":[...],"window":[lo,hi]}.
inline json ext_reports(const EquivariantCharacter& c, const DegreeWindow& w) {
  json out = json::array();
  for (int j : c.indices())
    out.push_back(json{{"j", j}, {"terms", terms(c.terms(j))}, {"window", json::array({w.lo, w.hi})}});
  return out;
}

/// {"p":int,"rows":{"9":{"0":1,...},...}} with string keys for j and s, in numeric order.
inline nlohmann::ordered_json lc_table(const LCTable& t) {
  using ojson = nlohmann::ordered_json;
  ojson rows = ojson::object();
  for (const auto& [j, row] : t.rows) {
    ojson r = ojson::object();
    for (const auto& [s, mult] : row) r[std::to_string(s)] = ojson::parse(big(mult).dump());
    rows[std::to_string(j)] = r;
  }
  ojson out = ojson::object();
  out["p"] = t.p;
  out["rows"] = rows;
  return out;
}

/// {"polynomial":[{"i":int,"terms":[...]}, ...]}.
inline json betti_polynomial(const BettiPolynomial& bp) {
  json poly = json::array();
  for (int i : bp.indices()) poly.push_back(json{{"i", i}, {"terms", terms(bp.terms.terms(i))}});
  return json{{"polynomial", poly}};
}

inline json betti_table(const BettiTable& t) {
  json rows = json::array();
  for (const auto& [key, v] : t.entries) rows.push_back(json{{"i", key.first}, {"degree", key.second}, {"beta", big(v)}});
  json totals = json::array();
  for (const auto& v : t.totals()) totals.push_back(big(v));
  return json{{"entries", rows}, {"totals", totals}};
}

}  // namespace detinv::json_io
