#include "doctest.h"

#include <random>

#include "tatekit/presented_group.hpp"
#include "tatekit/smith.hpp"

using namespace tatekit;

namespace {

Int det(const IntMatrix& m) {
  // small sizes only; cofactor expansion
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        sub(i - 1, cc++) = m(i, k);
      }
    }
    Int term = m(0, j) * det(sub);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t maxdim, int maxabs) {
  std::size_t r = 1 + rng() % maxdim, c = 1 + rng() % maxdim;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = static_cast<long long>(rng() % (2 * maxabs + 1)) - maxabs;
  return m;
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
  SUBCASE("identity") {
    auto s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.D == IntMatrix::identity(3));
    CHECK(s.rank == 3);
  }
  SUBCASE("2x2 with divisibility") {
    IntMatrix a{{2, 4}, {6, 8}};
    auto s = smith_normal_form(a);
    CHECK(s.D(0, 0) == 2);
    CHECK(s.D(1, 1) == 4);
    CHECK(s.U * a * s.V == s.D);
  }
  SUBCASE("zero matrix") {
    auto s = smith_normal_form(IntMatrix(2, 3));
    CHECK(s.D.is_zero());
    CHECK(s.rank == 0);
  }
}

TEST_CASE("smith normal form randomized invariants") {
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 200; ++iter) {
    IntMatrix a = random_matrix(rng, 6, 9);
    auto s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(abs(det(s.U)) == 1);
    CHECK(abs(det(s.V)) == 1);
    CHECK(s.Uinv * s.U == IntMatrix::identity(a.rows()));
    CHECK(s.V * s.Vinv == IntMatrix::identity(a.cols()));
    IntVec d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (d[i + 1] != 0) {
        REQUIRE(d[i] != 0);
        CHECK(d[i + 1] % d[i] == 0);
      }
    }
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
  }
}

TEST_CASE("kernel lattice") {
  SUBCASE("augmentation kernel") {
    IntMatrix a{{1, 1}};
    IntMatrix k = kernel_lattice(a);
    REQUIRE(k.cols() == 1);
    CHECK((a * k).is_zero());
    CHECK(abs(k(0, 0)) == 1);
    CHECK(k(0, 0) + k(1, 0) == 0);
  }
  SUBCASE("injective map has no kernel") {
    CHECK(kernel_lattice(IntMatrix::identity(2)).cols() == 0);
  }
  SUBCASE("2x + 3y = 0") {
    IntMatrix a{{2, 3}};
    IntMatrix k = kernel_lattice(a);
    REQUIRE(k.cols() == 1);
    CHECK((a * k).is_zero());
    CHECK(abs(k(0, 0)) == 3);
    CHECK(abs(k(1, 0)) == 2);
  }
  SUBCASE("random: columns independent and annihilated") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 100; ++iter) {
      IntMatrix a = random_matrix(rng, 6, 9);
      IntMatrix k = kernel_lattice(a);
      CHECK((a * k).is_zero());
      if (k.cols()) CHECK(smith_normal_form(k).rank == k.cols());
    }
  }
}

TEST_CASE("cokernel presentation") {
  SUBCASE("diag(2,3) is Z/6") {
    IntMatrix a{{2, 0}, {0, 3}};
    auto g = cokernel_presentation(a);
    REQUIRE(g.torsion().size() == 1);
    CHECK(g.torsion()[0] == 6);
    CHECK(g.free_rank() == 0);
  }
  SUBCASE("column (2,3) leaves free rank 1") {
    IntMatrix a{{2}, {3}};
    auto g = cokernel_presentation(a);
    CHECK(g.torsion().empty());
    CHECK(g.free_rank() == 1);
  }
  SUBCASE("identity relations give the trivial group") {
    auto g = cokernel_presentation(IntMatrix::identity(2));
    CHECK(g.is_trivial());
  }
  SUBCASE("invariant under unimodular changes") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 50; ++iter) {
      IntMatrix a = random_matrix(rng, 5, 6);
      auto s = smith_normal_form(a);  // U a V has the same cokernel type
      auto g1 = cokernel_presentation(a);
      auto g2 = cokernel_presentation(s.U * a * s.V);
      CHECK(g1.same_normal_form(g2));
    }
  }
}

TEST_CASE("presented group element arithmetic") {
  // Z^2 / <(2,0),(0,3)>
  IntMatrix rel{{2, 0}, {0, 3}};
  PresentedAbGroup g(2, rel);
  CHECK(g.element_is_zero({2, 3}));
  CHECK(g.element_is_zero({4, -3}));
  CHECK(!g.element_is_zero({1, 0}));
  CHECK(g.elements_equal({1, 1}, {3, 4}));
  CHECK(g.normal_coords({1, 1}) == g.normal_coords({3, -2}));
}

TEST_CASE("solver") {
  IntMatrix a{{2, 0}, {0, 3}};
  auto x = solve(a, {4, 9});
  REQUIRE(x.has_value());
  CHECK((a * *x) == IntVec{4, 9});
  CHECK(!solve(a, {1, 0}).has_value());
}

TEST_CASE("exactness checks") {
  SUBCASE("0 -> Z --2--> Z -> Z/2 -> 0 exact in the middle") {
    IntMatrix f{{2}};
    IntMatrix g{{1}};
    auto v = exactness_check(f, g, IntMatrix(1, 0), IntMatrix(1, 0), IntMatrix{{2}});
    CHECK(v.exact_at_B);
    CHECK(v.kernel_mod_image.is_trivial());
  }
  SUBCASE("Z --4--> Z --mod 2--> Z/2 fails with Z/2 defect") {
    IntMatrix f{{4}};
    IntMatrix g{{1}};
    auto v = exactness_check(f, g, IntMatrix(1, 0), IntMatrix(1, 0), IntMatrix{{2}});
    CHECK(!v.exact_at_B);
    REQUIRE(v.kernel_mod_image.torsion().size() == 1);
    CHECK(v.kernel_mod_image.torsion()[0] == 2);
    CHECK(v.image_index.value() == 2);
  }
  SUBCASE("identity after zero is exact") {
    IntMatrix f(2, 0);  // the zero group mapping in
    IntMatrix g = IntMatrix::identity(2);
    auto v = exactness_check(f, g, IntMatrix(0, 0), IntMatrix(2, 0), IntMatrix(2, 0));
    CHECK(v.exact_at_B);
  }
  SUBCASE("incompatible map throws") {
    IntMatrix f{{1}};
    IntMatrix g{{1}};
    // f : Z/2 -> Z cannot descend
    CHECK_THROWS_AS(exactness_check(f, g, IntMatrix{{2}}, IntMatrix(1, 0), IntMatrix(1, 0)),
                    IncompatibleMap);
  }
}

TEST_CASE("normal coordinate codec round trip") {
  IntMatrix rel{{2, 0, 1}, {0, 6, -1}, {0, 0, 4}};
  PresentedAbGroup g(3, rel);
  std::mt19937_64 rng(5);
  for (int it = 0; it < 30; ++it) {
    IntVec v(3);
    for (auto& x : v) x = static_cast<long long>(rng() % 21) - 10;
    IntVec c = g.normal_coords(v);
    IntVec back = g.from_normal_coords(c);
    CHECK(g.elements_equal(v, back));
  }
}
