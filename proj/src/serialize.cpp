#include "blocklab/serialize.hpp"

#include <stdexcept>

namespace blocklab {

namespace {

Json rational_json(const Rational& r) {
  return Json::array({numerator(r).str(), denominator(r).str()});
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_array() && j.size() == 2) {
    auto part = [](const Json& v) -> BigInt {
      if (v.is_number_integer()) return BigInt(v.get<long long>());
      if (v.is_string()) return BigInt(v.get<std::string>());
      throw std::invalid_argument("rational part must be an integer or a digit string");
    };
    BigInt den = part(j[1]);
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(part(j[0]), den);
  }
  throw std::invalid_argument("expected an integer or [num, den]");
}

}  // namespace

Json to_json(const GroupTable& g) {
  const auto& d = g.descriptor();
  Json j;
  j["family"] = d.family;
  if (d.family == "D*C") {
    j["n"] = d.n;
    j["m"] = d.m;
  } else if (d.family == "semidirect") {
    j["base"] = d.base ? to_json(*d.base) : Json();
    j["automorphism"] = d.automorphism_images;
  } else {
    j["order"] = g.order();
  }
  return j;
}

Json to_json(const FamilyElement& e) { return Json::array({e.i, e.j, e.k}); }

Json to_json(const Cyclotomic& c) {
  Json j;
  j["N"] = c.conductor();
  Json coeffs = Json::object();
  for (std::size_t e = 0; e < c.coeffs().size(); ++e)
    if (c.coeffs()[e] != 0) coeffs[std::to_string(e)] = rational_json(c.coeffs()[e]);
  j["coeffs"] = coeffs;
  return j;
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_array()) return Cyclotomic(rational_from(j));
  if (!j.is_object() || !j.contains("N") || !j.contains("coeffs"))
    throw std::invalid_argument("cyclotomic must be {\"N\": int, \"coeffs\": {...}}");
  long n = j["N"].get<long>();
  if (n <= 0) throw std::invalid_argument("conductor must be positive");
  std::map<long long, Rational> terms;
  for (auto it = j["coeffs"].begin(); it != j["coeffs"].end(); ++it)
    terms[std::stoll(it.key())] += rational_from(it.value());
  return Cyclotomic::from_exponents(n, terms);
}

std::vector<DecompRow> rows_from_json(const Json& j) {
  const Json& rows = j.is_object() && j.contains("rows") ? j["rows"] : j;
  if (!rows.is_array()) throw std::invalid_argument("rows must be a JSON array");
  std::vector<DecompRow> out;
  for (const auto& r : rows) {
    if (!r.is_array()) throw std::invalid_argument("each row must be an array");
    DecompRow row;
    for (const auto& e : r) row.push_back(cyclotomic_from_json(e));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const FiniteAbelian& a) {
  Json inv = Json::array();
  for (const auto& v : a.invariants) inv.push_back(v.str());
  return Json{{"invariants", inv}, {"name", a.to_string()}};
}

Json to_json(const CharacterTable& t) {
  Json j;
  j["group"] = to_json(*t.group);
  Json classes = Json::array();
  for (const auto& c : t.classes)
    classes.push_back({{"rep", t.group->coords(c.representative)}, {"size", c.size()}});
  j["classes"] = classes;
  Json chars = Json::array();
  for (const auto& row : t.chars) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    chars.push_back(r);
  }
  j["chars"] = chars;
  return j;
}

Json to_json(const BlockPartition& p) { return Json{{"blocks", p.blocks}, {"principal", p.principal}}; }

Json to_json(const BlockInvariants& inv) {
  Json j{{"k", inv.k}, {"k0", inv.k0}, {"k1", inv.k1}};
  if (inv.separate_kn2) j["kn2"] = inv.kn2;
  j["l"] = inv.l;
  j["e"] = inv.e;
  return j;
}

Json to_json(const SubsectionSum& s) {
  return Json{{"k_minus_l", s.k_minus_l}, {"sum_l", s.sum_l}, {"subsections", s.subsections}, {"pass", s.ok()}};
}

Json to_json(const Report& r) {
  Json lines = Json::array();
  for (const auto& l : r.lines) lines.push_back({{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
  return Json{{"pass", r.pass()}, {"checks", lines}};
}

Json to_json(const HeightResult& h) {
  static const char* kinds[] = {"height", "contradiction", "undetermined"};
  Json j{{"kind", kinds[static_cast<int>(h.kind)]}};
  if (h.kind == HeightResult::Kind::height) j["height"] = h.height;
  j["m_diag"] = to_json(h.m_diag);
  j["nu_diag"] = h.diag.to_string();
  if (!h.cross.infinite && h.cross.value != 0) j["nu_cross"] = h.cross.to_string();
  j["reason"] = h.reason;
  return j;
}

Json to_json(const CensusReport& r) {
  Json pts = Json::array();
  for (const auto& p : r.points)
    pts.push_back({{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"k", p.k}, {"k0", p.k0},
                   {"k1", p.k1}, {"kn2", p.kn2}, {"bound", p.bound}, {"cartan", p.cartan_ok},
                   {"trace", p.trace_ok}, {"classified", p.classified}});
  return Json{{"points", pts},
              {"max_k", r.max_k},
              {"target_k", r.target_k},
              {"height1_on_optimum", r.height1_on_optimum},
              {"height1_constant", r.height1_constant_on_optimum},
              {"pass", r.pass()}};
}

Json to_json(const WeightLedger& l) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < l.labels.size(); ++i) rows.push_back({{"Q", l.labels[i]}, {"w", l.w[i]}});
  return Json{{"n", l.params.n}, {"m", l.params.m}, {"case", to_string(l.fcase)},
              {"classes", rows}, {"target", l.target}, {"pass", l.pass()}};
}

Json to_json(const GluingReport& r) {
  return Json{{"objects", r.objects},     {"morphisms", r.morphisms},   {"A1", r.a1},
              {"A2", r.a2},               {"H0_A2", r.h0_a2.to_string()}, {"H1_A1", r.h1_a1.to_string()},
              {"solver", r.solver_used},  {"misses", r.misses},         {"pass", r.pass()}};
}

}  // namespace blocklab
