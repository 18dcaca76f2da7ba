#pragma once

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tatekit/bft.hpp"
#include "tatekit/cochains.hpp"
#include "tatekit/tn.hpp"

namespace tatekit {

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int cases = 0;
  int passed = 0;
  int failed = 0;
  std::vector<nlohmann::json> failures;  // property name + minimized fixture
  nlohmann::json to_json() const;
  bool ok() const { return failed == 0; }
};

std::vector<std::string> verify_suite_names();
/// Runs one of intlat, gmod, cochains, h1y, tn, global, bft, or all.
/// Deterministic per (suite, seed).  Throws UnknownSuite.
SuiteReport run_verify_suite(const std::string& name, std::uint64_t seed, int cases);

// deterministic fixture pool and generators, shared with the acceptance suite
struct NamedGroup {
  std::string name;
  FinGroup group;
};
const std::vector<NamedGroup>& fixture_groups();  // C2..C6, V4, S3, D4, Q8, C2^3

std::size_t rand_below(std::mt19937_64& rng, std::size_t n);
GSet random_gset(const FinGroup& g, std::mt19937_64& rng, unsigned max_orbits, unsigned max_size);
GModule random_free_module(const FinGroup& g, std::mt19937_64& rng, unsigned max_rank);
Cocycle2Table random_2cocycle(const GModule& m, std::mt19937_64& rng);
/// Size cap for random G-sets keeping the degree-window computations fast.
unsigned gset_size_cap(const FinGroup& g);

/// The tower with the given upper model whose lower level is the quotient by
/// a normal subgroup, places collapsing along its orbits.
TowerModel quotient_tower(const GlobalModel& upper, const Subgroup& normal_sub);

/// Model analog of the conditions imposed on S: the stabilizers of S-places
/// inside the kernel must generate its abelianization; this is what makes
/// the gamma maps of a tower isomorphisms.
bool tower_kernel_criterion(const GlobalModel& upper, const Subgroup& normal_sub);

/// A random quotient tower satisfying the kernel criterion.
TowerModel random_quotient_tower(const GlobalModel& upper, std::mt19937_64& rng);

/// Exactness of the long exact Tate sequence of a short exact sequence of
/// free modules, tested at every slot whose two neighbour degrees lie in the
/// window.  Returns true when all tested slots are exact.
bool les_exact(const GModule& a, const GModule& b, const GModule& c, const IntMatrix& f,
               const IntMatrix& g, int lo, int hi);

}  // namespace tatekit
