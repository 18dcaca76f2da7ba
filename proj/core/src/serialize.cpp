#include "tatekit/serialize.hpp"

#include <limits>

namespace tatekit {

namespace {

Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw ParseError("expected an integer or a decimal string");
}

}  // namespace

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of arrays");
  std::size_t rows = j.size();
  std::size_t cols = rows ? j[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(j[i][c]);
  }
  return m;
}

Json to_json(const IntVec& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(int_to_json(x));
  return out;
}

IntVec vec_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  IntVec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

Json to_json(const PresentedAbGroup& g) {
  Json t = Json::array();
  for (const Int& d : g.torsion()) t.push_back(int_to_json(d));
  return Json{{"torsion", t}, {"free_rank", g.free_rank()}};
}

Json group_to_json(const FinGroup& g) {
  Json gens = Json::array();
  for (unsigned idx : g.generators()) {
    Json p = Json::array();
    for (unsigned im : g.perm_of(idx)) p.push_back(im);
    gens.push_back(std::move(p));
  }
  return Json{{"degree", g.degree()}, {"generators", gens}};
}

FinGroup group_from_json(const Json& j, unsigned max_order) {
  if (!j.contains("degree") || !j.contains("generators")) throw ParseError("group needs degree and generators");
  unsigned degree = j.at("degree").get<unsigned>();
  std::vector<Perm> gens;
  for (const auto& p : j.at("generators")) gens.push_back(p.get<Perm>());
  return group_from_permutations(degree, gens, max_order);
}

Json gset_to_json(const GSet& x) {
  const FinGroup& g = x.group();
  Json acts = Json::array();
  for (unsigned slot : g.generators()) {
    Json p = Json::array();
    for (unsigned pt = 0; pt < x.size(); ++pt) p.push_back(x.act(slot, pt));
    acts.push_back(std::move(p));
  }
  return Json{{"size", x.size()}, {"generator_action", acts}};
}

GSet gset_from_json(const FinGroup& g, const Json& j) {
  if (!j.contains("size") || !j.contains("generator_action")) throw ParseError("gset needs size and generator_action");
  unsigned size = j.at("size").get<unsigned>();
  std::vector<Perm> acts;
  for (const auto& p : j.at("generator_action")) acts.push_back(p.get<Perm>());
  return GSet::from_generator_actions(g, size, acts);
}

Json module_to_json(const GModule& m) {
  Json acts = Json::array();
  for (unsigned slot : m.group().generators()) acts.push_back(to_json(m.action(slot)));
  return Json{{"rank", m.ambient_rank()}, {"relations", to_json(m.relations())},
              {"generator_action", acts}};
}

GModule module_from_json(const FinGroup& g, const Json& j) {
  if (!j.contains("rank")) throw ParseError("module needs a rank");
  std::size_t rank = j.at("rank").get<std::size_t>();
  IntMatrix rel(rank, 0);
  if (j.contains("relations") && !j.at("relations").empty()) rel = matrix_from_json(j.at("relations"));
  if (rel.rows() != rank && rel.cols() != 0) throw ParseError("relation rows must match the rank");
  std::vector<IntMatrix> gen_mats;
  if (j.contains("generator_action"))
    for (const auto& a : j.at("generator_action")) gen_mats.push_back(matrix_from_json(a));
  if (gen_mats.empty()) return GModule::trivial(g, PresentedAbGroup(rank, rel));
  return GModule::from_generator_matrices(g, PresentedAbGroup(rank, rel), gen_mats);
}

Json cocycle1_to_json(const Cocycle1Table& z) {
  Json out = Json::object();
  for (std::size_t e = 0; e < z.val.size(); ++e) out[std::to_string(e)] = to_json(z.val[e]);
  return out;
}

Cocycle1Table cocycle1_from_json(const Json& j, unsigned order, std::size_t rank) {
  Cocycle1Table z;
  z.val.assign(order, IntVec(rank));
  for (auto it = j.begin(); it != j.end(); ++it) {
    unsigned e = static_cast<unsigned>(std::stoul(it.key()));
    if (e >= order) throw ParseError("cocycle key out of range");
    z.val[e] = vec_from_json(it.value());
    if (z.val[e].size() != rank) throw ParseError("cocycle value has the wrong rank");
  }
  return z;
}

Json cocycle2_to_json(const Cocycle2Table& z) {
  Json out = Json::object();
  for (unsigned s = 0; s < z.order; ++s)
    for (unsigned t = 0; t < z.order; ++t) {
      if (is_zero(z.at(s, t))) continue;
      out[std::to_string(s) + "," + std::to_string(t)] = to_json(z.at(s, t));
    }
  return out;
}

Cocycle2Table cocycle2_from_json(const Json& j, unsigned order, std::size_t rank) {
  Cocycle2Table z = Cocycle2Table::zeros(order, rank);
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto comma = it.key().find(',');
    if (comma == std::string::npos) throw ParseError("cocycle key must be 'sigma,tau'");
    unsigned s = static_cast<unsigned>(std::stoul(it.key().substr(0, comma)));
    unsigned t = static_cast<unsigned>(std::stoul(it.key().substr(comma + 1)));
    if (s >= order || t >= order) throw ParseError("cocycle key out of range");
    z.at(s, t) = vec_from_json(it.value());
    if (z.at(s, t).size() != rank) throw ParseError("cocycle value has the wrong rank");
  }
  return z;
}

Json model_to_json(const GlobalModel& m) {
  return Json{{"group", group_to_json(m.group())}, {"places", gset_to_json(m.places)},
              {"s_orbits", m.s_orbits}};
}

GlobalModel model_from_json(const Json& j) {
  FinGroup g = group_from_json(j.at("group"));
  GSet places = gset_from_json(g, j.at("places"));
  std::vector<unsigned> s = j.at("s_orbits").get<std::vector<unsigned>>();
  return make_global_model(std::move(places), std::move(s));
}

Json tower_to_json(const TowerModel& t) {
  return Json{{"upper", model_to_json(t.upper)}, {"lower", model_to_json(t.lower)},
              {"group_surjection", t.group_surjection}, {"place_surjection", t.place_surjection}};
}

TowerModel tower_from_json(const Json& j) {
  return make_tower(model_from_json(j.at("upper")), model_from_json(j.at("lower")),
                    j.at("group_surjection").get<std::vector<unsigned>>(),
                    j.at("place_surjection").get<std::vector<unsigned>>());
}

}  // namespace tatekit
