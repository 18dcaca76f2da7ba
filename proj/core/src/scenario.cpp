#include <map>

#include "tatekit/serialize.hpp"
#include "tatekit/tate.hpp"

namespace tatekit {

namespace {

struct Env {
  std::map<std::string, FinGroup> groups;
  std::map<std::string, GSet> gsets;
  std::map<std::string, GModule> modules;
  std::map<std::string, ExtensionData> extensions;
  std::map<std::string, GlobalModel> models;
  std::map<std::string, TowerModel> towers;

  template <typename T>
  const T& resolve(const std::map<std::string, T>& table, const Json& key, const char* kind) const {
    if (!key.is_string()) throw UnresolvedReference(std::string("expected a ") + kind + " name");
    auto it = table.find(key.get<std::string>());
    if (it == table.end())
      throw UnresolvedReference(std::string(kind) + " '" + key.get<std::string>() + "' is not defined");
    return it->second;
  }
  const FinGroup& group(const Json& k) const { return resolve(groups, k, "group"); }
  const GSet& gset(const Json& k) const { return resolve(gsets, k, "gset"); }
  const GModule& module(const Json& k) const { return resolve(modules, k, "module"); }
  const ExtensionData& extension(const Json& k) const { return resolve(extensions, k, "extension"); }
  const GlobalModel& model(const Json& k) const { return resolve(models, k, "model"); }
  const TowerModel& tower(const Json& k) const { return resolve(towers, k, "tower"); }
};

Subgroup subgroup_arg(const FinGroup& g, const Json& j) {
  return Subgroup::generated_by(g, j.get<std::vector<unsigned>>());
}

Json maps_json(const char* n1, const IntMatrix& m1) { return Json{{n1, to_json(m1)}}; }

TNTriple triple_arg(const Env& env, const Json& args) {
  const GModule& x = env.module(args.at("x"));
  const GModule& a = env.module(args.at("a"));
  HomModule hom = hom_module(x, a);
  Cocycle2Table alpha =
      cocycle2_from_json(args.at("alpha"), x.group().order(), hom.mod.ambient_rank());
  return make_tn_triple(x, a, std::move(alpha));
}

H1YContext h1y_ctx_arg(const Env& env, const Json& args) {
  const ExtensionData& ext = env.extension(args.at("extension"));
  const GModule& m = env.module(args.at("m"));
  const GModule& y = env.module(args.at("y"));
  return make_h1y_context(ext, m, y, matrix_from_json(args.at("xi")));
}

Json run_task(const Env& env, const std::string& op, const Json& args) {
  if (op == "snf") {
    IntMatrix a = matrix_from_json(args.at("matrix"));
    SmithDecomposition s = smith_normal_form(a);
    bool ok = (s.U * a * s.V) == s.D;
    return Json{{"U", to_json(s.U)}, {"D", to_json(s.D)}, {"V", to_json(s.V)},
                {"rank", s.rank}, {"uav_equals_d", ok}};
  }
  if (op == "kernel_lattice") return maps_json("basis", kernel_lattice(matrix_from_json(args.at("matrix"))));
  if (op == "cokernel")
    return Json{{"group", to_json(cokernel_presentation(matrix_from_json(args.at("matrix"))))}};
  if (op == "exactness") {
    auto grab = [&](const char* k, std::size_t rows) {
      return args.contains(k) ? matrix_from_json(args.at(k)) : IntMatrix(rows, 0);
    };
    IntMatrix f = matrix_from_json(args.at("f"));
    IntMatrix g = matrix_from_json(args.at("g"));
    auto v = exactness_check(f, g, grab("rel_a", f.cols()), grab("rel_b", f.rows()),
                             grab("rel_c", g.rows()));
    Json out{{"exact_at_B", v.exact_at_B},
             {"composite_zero", v.composite_zero},
             {"kernel_mod_image", to_json(v.kernel_mod_image)}};
    if (v.image_index) out["image_index"] = v.image_index->str();
    return out;
  }
  if (op == "group_order") {
    const FinGroup& g = env.group(args.at("group"));
    return Json{{"order", g.order()}, {"abelian", g.is_abelian()}};
  }
  if (op == "orbits") {
    const GSet& x = env.gset(args.at("gset"));
    Json out = Json::array();
    for (const auto& o : x.orbits_and_stabilizers())
      out.push_back(Json{{"points", o.points},
                         {"base_point", o.base_point},
                         {"stabilizer", o.stabilizer.members()}});
    return out;
  }
  if (op == "coset_representatives") {
    const FinGroup& g = env.group(args.at("group"));
    Subgroup h = subgroup_arg(g, args.at("subgroup"));
    auto side = args.value("side", std::string("left")) == "right" ? Subgroup::Side::Right
                                                                   : Subgroup::Side::Left;
    Json out{{"representatives", h.coset_representatives(side)}};
    if (side == Subgroup::Side::Right) out["retraction"] = h.retraction_to_subgroup();
    return out;
  }
  if (op == "subgroup_view") {
    const FinGroup& g = env.group(args.at("group"));
    SubgroupView v = subgroup_view(subgroup_arg(g, args.at("subgroup")));
    return Json{{"group", group_to_json(v.group)}, {"to_parent", v.to_parent}};
  }
  if (op == "permutation_module") {
    const GSet& x = env.gset(args.at("gset"));
    if (args.value("reduced", false)) {
      ReducedPermModule red = reduced_permutation_module(x);
      return Json{{"module", module_to_json(red.mod)}, {"basis_in_full", to_json(red.basis_in_full)}};
    }
    return Json{{"module", module_to_json(permutation_module(x))}};
  }
  if (op == "hom_module")
    return Json{{"group", to_json(hom_module(env.module(args.at("a")), env.module(args.at("m")))
                                      .mod.underlying())}};
  if (op == "tensor_module")
    return Json{{"group", to_json(tensor_module(env.module(args.at("a")), env.module(args.at("m")))
                                      .mod.underlying())}};
  if (op == "invariants") {
    auto inv = invariants(env.module(args.at("module")));
    return Json{{"group", to_json(inv.group)}, {"inclusion", to_json(inv.inclusion)}};
  }
  if (op == "coinvariants")
    return Json{{"group", to_json(coinvariants(env.module(args.at("module"))).group)}};
  if (op == "norm_map") {
    auto n = norm_map(env.module(args.at("module")));
    return Json{{"ambient", to_json(n.ambient)},
                {"kernel", to_json(map_kernel(n.coinv_to_inv, n.coinv.group.relations(),
                                              n.inv.group.relations()))},
                {"cokernel", to_json(map_cokernel(n.coinv_to_inv, n.inv.group.relations()))}};
  }
  if (op == "tate") {
    const GModule& m = env.module(args.at("module"));
    int degree = args.at("degree").get<int>();
    int window = args.value("window", 3);
    TateGroup t = tate_cohomology(m, degree, window);
    Json out{{"group", to_json(t.group())}};
    if (args.contains("class")) {
      // the class is given in normal-form coordinates (torsion then free)
      IntVec cls = t.group().from_normal_coords(vec_from_json(args.at("class")));
      if (degree == 1)
        out["representative"] = cocycle1_to_json(t.cocycle1_representative(cls));
      else if (degree == 2)
        out["representative"] = cocycle2_to_json(t.cocycle2_representative(cls));
      else if (degree == 0)
        out["representative"] = to_json(t.invariant_representative(cls));
      else if (degree == -1)
        out["representative"] = to_json(t.norm_kernel_representative(cls));
      else
        throw Error("representatives are available for degrees -1..2 only");
    }
    return out;
  }
  if (op == "coinduction" || op == "shapiro_check") {
    const FinGroup& g = env.group(args.at("group"));
    Subgroup sub = subgroup_arg(g, args.at("subgroup"));
    SubgroupView view = subgroup_view(sub);
    const GModule& m0 = env.module(args.at("module"));
    if (!(m0.group() == view.group)) throw GroupMismatch("module is not over the subgroup view");
    Coinduction r = coinduction(g, view, m0);
    Json out{{"coinduced", module_to_json(r.mod)},
             {"epsilon", to_json(r.epsilon)},
             {"section", to_json(r.section)}};
    if (op == "shapiro_check") {
      int degree = args.value("degree", 1);
      auto big = tate_cohomology(r.mod, degree);
      auto small = tate_cohomology(m0, degree);
      out["big"] = to_json(big.group());
      out["small"] = to_json(small.group());
      out["isomorphic"] = big.group().same_normal_form(small.group());
    }
    return out;
  }
  if (op == "restrict_cocycle" || op == "corestrict_cocycle" || op == "hochschild_serre") {
    const GModule& m = env.module(args.at("module"));
    Subgroup sub = subgroup_arg(m.group(), args.at("subgroup"));
    SubgroupView view = subgroup_view(sub);
    int degree = args.at("degree").get<int>();
    if (degree == 1) {
      if (op == "restrict_cocycle") {
        Cocycle1Table z = cocycle1_from_json(args.at("table"), m.group().order(), m.ambient_rank());
        return Json{{"table", cocycle1_to_json(restrict_cocycle1(z, view))}};
      }
      if (op == "corestrict_cocycle") {
        Cocycle1Table z = cocycle1_from_json(args.at("table"), view.group.order(), m.ambient_rank());
        return Json{{"table", cocycle1_to_json(corestrict_cocycle1(m, sub, view, z))}};
      }
      Cocycle1Table z = cocycle1_from_json(args.at("table"), view.group.order(), m.ambient_rank());
      return Json{{"table", cocycle1_to_json(hochschild_serre_1(m, sub, view,
                                                                args.at("x").get<unsigned>(), z))}};
    }
    if (degree != 2) throw Error("cocycle tables live in degrees 1 and 2");
    if (op == "restrict_cocycle") {
      Cocycle2Table z = cocycle2_from_json(args.at("table"), m.group().order(), m.ambient_rank());
      return Json{{"table", cocycle2_to_json(restrict_cocycle2(z, view))}};
    }
    if (op == "corestrict_cocycle") {
      Cocycle2Table z = cocycle2_from_json(args.at("table"), view.group.order(), m.ambient_rank());
      return Json{{"table", cocycle2_to_json(corestrict_cocycle2(m, sub, view, z))}};
    }
    Cocycle2Table z = cocycle2_from_json(args.at("table"), view.group.order(), m.ambient_rank());
    return Json{{"table", cocycle2_to_json(hochschild_serre_2(m, sub, view,
                                                              args.at("x").get<unsigned>(), z))}};
  }
  if (op == "cup_2_minus1") {
    const GModule& amod = env.module(args.at("a_module"));
    const GModule& bmod = env.module(args.at("b_module"));
    TensorModule t = tensor_module(amod, bmod);
    BilinearPairing p = tensor_pairing(t, amod, bmod);
    Cocycle2Table a = cocycle2_from_json(args.at("a_table"), amod.group().order(), amod.ambient_rank());
    IntVec b = vec_from_json(args.at("b"));
    Cocycle1Table c = cup_2_minus1(p, a, b);
    Cocycle1Table d = cup_2_minus1_alt(p, a, b);
    Cocycle1Table diff;
    diff.val.resize(c.val.size());
    for (std::size_t e = 0; e < c.val.size(); ++e) diff.val[e] = c.val[e] - d.val[e];
    return Json{{"c", cocycle1_to_json(c)}, {"d", cocycle1_to_json(d)},
                {"cohomologous", cobounding_element_1(t.mod, diff).has_value()}};
  }
  if (op == "corestrict_hom") {
    const ExtensionData& e = env.extension(args.at("extension"));
    const GModule& m = env.module(args.at("module"));
    ExtCocycle1 out = corestrict_hom_to_extension(e, m, matrix_from_json(args.at("mu")));
    Json sec = Json::object();
    for (std::size_t i = 0; i < out.section.size(); ++i) sec[std::to_string(i)] = to_json(out.section[i]);
    return Json{{"hom_part", to_json(out.hom_part)}, {"section", sec},
                {"is_cocycle", is_ext_cocycle1(e, m, out)}};
  }
  if (op == "pullback_extension") {
    const ExtensionData& from = env.extension(args.at("from_extension"));
    const ExtensionData& to = env.extension(args.at("to_extension"));
    const GModule& m = env.module(args.at("module"));
    ExtensionMorphism mor = extension_morphism(from, to, matrix_from_json(args.at("h")));
    ExtCocycle1 z;
    z.hom_part = matrix_from_json(args.at("cocycle").at("hom_part"));
    z.section.assign(m.group().order(), IntVec(m.ambient_rank()));
    const Json& sec = args.at("cocycle").at("section");
    for (auto it = sec.begin(); it != sec.end(); ++it)
      z.section[std::stoul(it.key())] = vec_from_json(it.value());
    ExtCocycle1 out = pullback_ext_cocycle(mor, from, to, m, z);
    Json osec = Json::object();
    for (std::size_t i = 0; i < out.section.size(); ++i) osec[std::to_string(i)] = to_json(out.section[i]);
    return Json{{"hom_part", to_json(out.hom_part)}, {"section", osec}};
  }
  if (op == "h1y_compute" || op == "c_map" || op == "absbt" || op == "h1y_restrict") {
    H1YContext ctx = h1y_ctx_arg(env, args);
    H1YGroup h = h1y_compute(ctx);
    if (op == "h1y_compute")
      return Json{{"group", to_json(h.group)},
                  {"i", to_json(h.i_matrix)},
                  {"r", to_json(h.r_matrix)},
                  {"t", to_json(h.t_matrix)},
                  {"c", to_json(h.c_matrix)},
                  {"h1_gm", to_json(h.h1_gm.group())},
                  {"h2_gm", to_json(h.h2_gm.group())},
                  {"yg", to_json(h.yg_group)},
                  {"h1_em", to_json(h.h1_em)}};
    if (op == "c_map") {
      SnfSolver by(h.y_inv.inclusion);
      IntMatrix nmat(h.yg_group.ambient_rank(), ctx.y.ambient_rank());
      for (std::size_t j = 0; j < ctx.y.ambient_rank(); ++j) {
        auto c = by.solve(ctx.y.norm_matrix() * unit_vec(ctx.y.ambient_rank(), j));
        if (!c) throw Error("internal: norm image not invariant");
        nmat.set_column(j, *c);
      }
      bool rc_is_norm = presented_maps_equal(h.r_matrix * h.c_matrix, nmat, h.yg_group);
      return Json{{"c", to_json(h.c_matrix)}, {"rc_equals_norm", rc_is_norm}};
    }
    if (op == "absbt") {
      AbsBTVerdict v = absbt_criterion(ctx, h);
      return Json{{"c_iso", v.c_iso}, {"cup_minus1_bijective", v.cup_minus1_bijective},
                  {"cup_0_injective", v.cup_0_injective}, {"consistent", v.consistent()}};
    }
    Subgroup sub = subgroup_arg(ctx.m.group(), args.at("subgroup"));
    H1YRestriction res = h1y_restrict(ctx, h, sub);
    bool commutes = presented_maps_equal(res.res_matrix * h.c_matrix,
                                         res.group.c_matrix * res.averaging, res.group.group);
    return Json{{"restricted_group", to_json(res.group.group)}, {"c_square_commutes", commutes},
                {"averaging", to_json(res.averaging)}};
  }
  if (op == "verify_weak_tn") {
    TNTriple t = triple_arg(env, args);
    int lo = args.at("window")[0].get<int>(), hi = args.at("window")[1].get<int>();
    TNVerdict v = verify_weak_tn(t, lo, hi);
    Json per = Json::array();
    for (std::size_t i = 0; i < v.weak_tn.size(); ++i) {
      Json degs = Json::object();
      for (int r = lo; r <= hi; ++r) degs[std::to_string(r)] = static_cast<bool>(v.weak_tn[i][r - lo]);
      per.push_back(Json{{"subgroup", v.subgroup_members[i]}, {"weak_tn", degs},
                         {"rigid", static_cast<bool>(v.rigid[i])}});
    }
    return Json{{"per_subgroup", per}, {"window_certified_tn", v.window_certified_tn()}};
  }
  if (op == "verify_rigidity") {
    TNTriple t = triple_arg(env, args);
    auto rig = verify_rigidity(t);
    return Json{{"rigid", std::vector<bool>(rig.begin(), rig.end())}};
  }
  if (op == "class_c") {
    TNTriple t = triple_arg(env, args);
    int lo = args.at("window")[0].get<int>(), hi = args.at("window")[1].get<int>();
    return Json{{"member", class_c_membership(t, env.module(args.at("module")), lo, hi)}};
  }
  if (op == "triple_morphism") {
    Json t2args{{"x", args.at("x2")}, {"a", args.at("a2")}, {"alpha", args.at("alpha2")}};
    Json t1args{{"x", args.at("x1")}, {"a", args.at("a1")}, {"alpha", args.at("alpha1")}};
    TNTriple t2 = triple_arg(env, t2args);
    TNTriple t1 = triple_arg(env, t1args);
    TNRho r = triple_morphism_rho(t2, t1, matrix_from_json(args.at("b")),
                                  matrix_from_json(args.at("a")), env.module(args.at("module")));
    return Json{{"rho", to_json(r.rho)}, {"c_square_commutes", r.c_square_commutes}};
  }
  if (op == "x_sequence") {
    XSequence x = x_sequence(env.model(args.at("model")));
    return Json{{"x3", module_to_json(x.x3)}, {"x2", module_to_json(x.x2)},
                {"x1", module_to_json(x.x1)}, {"b_prime", to_json(x.b_prime)}, {"b", to_json(x.b)}};
  }
  if (op == "adequacy_check") {
    AdequacyVerdict v = adequacy_check(env.model(args.at("model")));
    return Json{{"stabilizer_cover", v.stabilizer_cover}, {"cyclic_cover", v.cyclic_cover},
                {"ideal_class_condition", "unmodeled"}};
  }
  if (op == "coinvariant_exactness") {
    CoinvariantExactness v = coinvariant_exactness(env.model(args.at("model")));
    return Json{{"exact", v.exact}, {"stabilizers_generate_gab", v.stabilizers_generate_gab}};
  }
  if (op == "tower_maps") {
    TowerMaps maps = tower_maps(env.tower(args.at("tower")));
    return Json{{"p1", to_json(maps.p1)}, {"p2", to_json(maps.p2)}, {"p3", to_json(maps.p3)},
                {"j1", to_json(maps.j1)}, {"j2", to_json(maps.j2)}, {"j3", to_json(maps.j3)},
                {"identities_hold", maps.identities_hold}};
  }
  if (op == "local_model") {
    LocalModelData d = local_model_at(env.model(args.at("model")), args.at("place").get<unsigned>());
    return Json{{"decomposition_group", d.gv.members()}, {"place", d.place},
                {"lambda", to_json(d.lambda_v)}, {"mu", to_json(d.mu_v)}};
  }
  if (op == "bft_compute") {
    TorusData t = make_torus_data(env.model(args.at("model")), env.module(args.at("module")));
    return Json{{"group", to_json(bft_compute(t, args.at("i").get<int>()).group)}};
  }
  if (op == "newton_norm") {
    TorusData t = make_torus_data(env.model(args.at("model")), env.module(args.at("module")));
    NewtonData n = newton_norm(t, args.at("i").get<int>());
    return Json{{"matrix", to_json(n.coinv_to_inv)},
                {"kernel", to_json(map_kernel(n.coinv_to_inv, n.b.group.relations(),
                                              n.inv.group.relations()))},
                {"cokernel", to_json(map_cokernel(n.coinv_to_inv, n.inv.group.relations()))}};
  }
  if (op == "localize") {
    TorusData t = make_torus_data(env.model(args.at("model")), env.module(args.at("module")));
    Localization l = localize(t, args.at("place").get<unsigned>());
    return Json{{"matrix", to_json(l.matrix)}, {"target", to_json(l.target)}};
  }
  if (op == "total_localization") {
    TorusData t = make_torus_data(env.model(args.at("model")), env.module(args.at("module")));
    TotalLocalization tot = total_localization(t);
    Json out{{"exact", tot.exact}, {"mg", to_json(tot.mg)}};
    if (args.contains("tuple")) {
      std::vector<IntVec> tuple;
      for (const auto& part : args.at("tuple")) tuple.push_back(vec_from_json(part));
      out["accepted"] = tot.image_criterion(tuple);
    }
    return out;
  }
  if (op == "inflate") {
    const TowerModel& tw = env.tower(args.at("tower"));
    TowerMaps maps = tower_maps(tw);
    Inflation inf = inflate(tw, maps, env.module(args.at("module")), args.at("i").get<int>());
    return Json{{"bijective", inf.bijective}, {"norm_square_commutes", inf.norm_square_commutes},
                {"matrix", to_json(inf.matrix)}};
  }
  if (op == "cor_res") {
    TorusData t = make_torus_data(env.model(args.at("model")), env.module(args.at("module")));
    Subgroup sub = subgroup_arg(t.model.group(), args.at("subgroup"));
    CorRes cr = cor_res(t, sub, args.at("i").get<int>());
    IntMatrix comp = cr.cor * cr.res;
    IntMatrix scaled(comp.rows(), comp.cols());
    for (std::size_t d = 0; d < comp.rows(); ++d) scaled(d, d) = Int(sub.index());
    return Json{{"cor", to_json(cr.cor)}, {"res", to_json(cr.res)},
                {"cor_res_is_index", presented_maps_equal(comp, scaled, cr.lower.group)}};
  }
  if (op == "shapiro_bft") {
    const GlobalModel& model = env.model(args.at("model"));
    Subgroup sub = subgroup_arg(model.group(), args.at("subgroup"));
    const GModule& m0 = env.module(args.at("module"));
    ShapiroBft sh = shapiro_bft(model, sub, m0, args.at("i").get<int>());
    return Json{{"mutually_inverse", sh.mutually_inverse},
                {"group", to_json(sh.small_coinv)}};
  }
  if (op == "reductive_a") {
    const GlobalModel& model = env.model(args.at("model"));
    const GModule& lambda = env.module(args.at("lambda"));
    const GModule& lambda_c = env.module(args.at("lambda_c"));
    ReductiveA r = reductive_a(model, lambda, lambda_c, matrix_from_json(args.at("iota")));
    return Json{{"a", to_json(r.a_group)}, {"a0", to_json(r.a0_group)},
                {"iota_invariants_injective", r.iota_inv_injective}};
  }
  throw ParseError("unknown op '" + op + "'");
}

}  // namespace

Scenario parse_scenario(const Json& j) {
  if (!j.is_object()) throw ParseError("scenario must be a JSON object");
  // validate up front so unresolved references fail before any task runs
  Env env;
  if (j.contains("groups"))
    for (auto it = j.at("groups").begin(); it != j.at("groups").end(); ++it)
      env.groups.emplace(it.key(), group_from_json(it.value()));
  if (j.contains("gsets"))
    for (auto it = j.at("gsets").begin(); it != j.at("gsets").end(); ++it)
      env.gsets.emplace(it.key(), gset_from_json(env.group(it.value().at("group")), it.value()));
  if (j.contains("tasks") && !j.at("tasks").is_array()) throw ParseError("tasks must be an array");
  if (j.contains("tasks"))
    for (const auto& t : j.at("tasks")) {
      if (!t.contains("op") || !t.contains("id")) throw ParseError("each task needs an op and an id");
    }
  return Scenario{j};
}

RunReport run_scenario(const Scenario& s) {
  const Json& j = s.raw;
  Env env;
  if (j.contains("groups"))
    for (auto it = j.at("groups").begin(); it != j.at("groups").end(); ++it)
      env.groups.emplace(it.key(), group_from_json(it.value()));
  if (j.contains("gsets"))
    for (auto it = j.at("gsets").begin(); it != j.at("gsets").end(); ++it)
      env.gsets.emplace(it.key(), gset_from_json(env.group(it.value().at("group")), it.value()));
  if (j.contains("modules"))
    for (auto it = j.at("modules").begin(); it != j.at("modules").end(); ++it)
      env.modules.emplace(it.key(), module_from_json(env.group(it.value().at("group")), it.value()));
  if (j.contains("extensions"))
    for (auto it = j.at("extensions").begin(); it != j.at("extensions").end(); ++it) {
      const GModule& kernel = env.module(it.value().at("kernel"));
      Cocycle2Table z = cocycle2_from_json(it.value().at("cocycle"), kernel.group().order(),
                                           kernel.ambient_rank());
      env.extensions.emplace(it.key(), make_extension(kernel, std::move(z)));
    }
  if (j.contains("models"))
    for (auto it = j.at("models").begin(); it != j.at("models").end(); ++it) {
      const Json& spec = it.value();
      const FinGroup& g = env.group(spec.at("group"));
      GSet places = spec.at("places").is_string() ? env.gset(spec.at("places"))
                                                  : gset_from_json(g, spec.at("places"));
      env.models.emplace(it.key(), make_global_model(places,
                                                     spec.at("s_orbits").get<std::vector<unsigned>>()));
    }
  if (j.contains("towers"))
    for (auto it = j.at("towers").begin(); it != j.at("towers").end(); ++it) {
      const Json& spec = it.value();
      env.towers.emplace(it.key(),
                         make_tower(env.model(spec.at("upper")), env.model(spec.at("lower")),
                                    spec.at("group_surjection").get<std::vector<unsigned>>(),
                                    spec.at("place_surjection").get<std::vector<unsigned>>()));
    }

  RunReport report;
  report.by_task = Json::object();
  if (j.contains("tasks"))
    for (const auto& t : j.at("tasks")) {
      std::string id = t.at("id").get<std::string>();
      try {
        report.by_task[id] = run_task(env, t.at("op").get<std::string>(),
                                      t.contains("args") ? t.at("args") : Json::object());
      } catch (const std::exception& e) {
        report.by_task[id] = Json{{"error", e.what()}};
        report.any_error = true;
      }
    }
  return report;
}

Json RunReport::to_json() const {
  return Json{{"tasks", by_task}, {"ok", !any_error}};
}

}  // namespace tatekit
