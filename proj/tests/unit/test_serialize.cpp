#include "doctest.h"

#include "tatekit/serialize.hpp"
#include "tatekit/verify.hpp"

using namespace tatekit;

TEST_CASE("matrix and vector round trips") {
  IntMatrix m{{1, -2, 3}, {4, 5, -6}};
  CHECK(matrix_from_json(to_json(m)) == m);
  IntMatrix big(1, 1);
  big(0, 0) = Int("123456789012345678901234567890");
  CHECK(matrix_from_json(to_json(big)) == big);
  IntVec v{7, -8, 9};
  CHECK(vec_from_json(to_json(v)) == v);
}

TEST_CASE("group, gset and module round trips") {
  FinGroup g = group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  FinGroup g2 = group_from_json(group_to_json(g));
  CHECK(g == g2);

  GSet x = GSet::from_generator_actions(g, 4, {{1, 0, 2, 3}, {1, 2, 0, 3}});
  GSet x2 = gset_from_json(g, gset_to_json(x));
  for (unsigned e = 0; e < g.order(); ++e)
    for (unsigned p = 0; p < 4; ++p) CHECK(x.act(e, p) == x2.act(e, p));

  GModule m = permutation_module(x);
  GModule m2 = module_from_json(g, module_to_json(m));
  for (unsigned e = 0; e < g.order(); ++e) CHECK(m.action(e) == m2.action(e));
}

TEST_CASE("cocycle table round trips") {
  FinGroup g = group_from_permutations(2, {{1, 0}});
  GModule z = GModule::trivial(g, 1);
  Cocycle2Table t = Cocycle2Table::zeros(2, 1);
  t.at(1, 1) = IntVec{5};
  Cocycle2Table t2 = cocycle2_from_json(cocycle2_to_json(t), 2, 1);
  CHECK(t2.at(1, 1) == IntVec{5});
  CHECK(is_zero(t2.at(0, 1)));
  REQUIRE(is_cocycle2(z, t2));
}

TEST_CASE("model and tower round trips") {
  GlobalModel m = three_place_model();
  GlobalModel m2 = model_from_json(model_to_json(m));
  CHECK(m2.s_orbits == m.s_orbits);
  CHECK(m2.places.size() == m.places.size());
}

TEST_CASE("scenario: parse, run, determinism") {
  Json scenario = Json::parse(R"({
    "groups": {"C2": {"degree": 2, "generators": [[1, 0]]}},
    "gsets": {"places": {"group": "C2", "size": 3, "generator_action": [[1, 0, 2]]}},
    "modules": {"Z": {"group": "C2", "rank": 1}},
    "models": {"M": {"group": "C2", "places": "places", "s_orbits": [0, 1]}},
    "tasks": [
      {"id": "t1", "op": "snf", "args": {"matrix": [[2, 4], [6, 8]]}},
      {"id": "t2", "op": "bft_compute", "args": {"model": "M", "module": "Z", "i": 3}},
      {"id": "t3", "op": "tate", "args": {"module": "Z", "degree": 0}}
    ]
  })");
  Scenario sc = parse_scenario(scenario);
  RunReport rep = run_scenario(sc);
  CHECK(!rep.any_error);
  CHECK(rep.by_task["t1"]["D"][0][0] == 2);
  CHECK(rep.by_task["t1"]["D"][1][1] == 4);
  CHECK(rep.by_task["t2"]["group"]["free_rank"] == 1);
  CHECK(rep.by_task["t2"]["group"]["torsion"].empty());
  CHECK(rep.by_task["t3"]["group"]["torsion"][0] == 2);
  // determinism: run twice, identical JSON
  RunReport rep2 = run_scenario(sc);
  CHECK(rep.to_json() == rep2.to_json());

  SUBCASE("schema round trip of the report") {
    Json dumped = Json::parse(rep.to_json().dump());
    CHECK(dumped == rep.to_json());
  }
  SUBCASE("unresolved reference is an error") {
    Json bad = scenario;
    bad["tasks"] = Json::array({Json{{"id", "x"}, {"op", "tate"},
                                     {"args", Json{{"module", "nope"}, {"degree", 0}}}}});
    RunReport r = run_scenario(parse_scenario(bad));
    CHECK(r.any_error);
    std::string err = r.by_task["x"]["error"].get<std::string>();
    CHECK(err.find("not defined") != std::string::npos);
  }
  SUBCASE("malformed scenarios fail to parse") {
    CHECK_THROWS_AS(parse_scenario(Json::parse("[1,2]")), ParseError);
    Json notask = Json{{"tasks", Json::array({Json{{"op", "snf"}}})}};
    CHECK_THROWS_AS(parse_scenario(notask), ParseError);
  }
}

TEST_CASE("verify suite reports are deterministic per seed") {
  SuiteReport a = run_verify_suite("intlat", 7, 5);
  SuiteReport b = run_verify_suite("intlat", 7, 5);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.passed == 5);
  CHECK_THROWS_AS(run_verify_suite("nope", 1, 1), UnknownSuite);
}
