#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finite_group.hpp"
#include "oracles.hpp"

#include <map>

using namespace loopclass;

namespace {

int elem(const GroupRef& g, const std::string& name) {
  for (std::size_t i = 0; i < g->size(); ++i)
    if (g->name(static_cast<int>(i)) == name) return static_cast<int>(i);
  throw std::logic_error("no element named " + name);
}

}  // namespace

TEST_CASE("conjugacy of tuples in S3") {
  auto s3 = FiniteGroup::symmetric(3);
  int t12 = elem(s3, "102");  // transposition (0 1)
  int t13 = elem(s3, "210");  // transposition (0 2)
  int c = elem(s3, "120");    // 3-cycle
  LoopClass a(s3, {t12, t12});
  CHECK(are_conjugate(a, a));
  CHECK(are_conjugate(a, LoopClass(s3, {t13, t13})));
  CHECK_FALSE(are_conjugate(LoopClass(s3, {t12, s3->identity()}),
                            LoopClass(s3, {c, s3->identity()})));
}

TEST_CASE("conjugacy across groups is rejected") {
  auto s3 = FiniteGroup::symmetric(3);
  auto c2 = FiniteGroup::cyclic(2);
  CHECK_THROWS_AS(are_conjugate(LoopClass(s3, {0}), LoopClass(c2, {0})),
                  std::invalid_argument);
}

TEST_CASE("non-commuting tuples are rejected") {
  auto s3 = FiniteGroup::symmetric(3);
  int t12 = elem(s3, "102");
  int c = elem(s3, "120");
  CHECK_THROWS_AS(LoopClass(s3, {t12, c}), std::invalid_argument);
}

TEST_CASE("commuting tuple classification counts") {
  CHECK(classify_commuting_tuples(FiniteGroup::trivial(), 2).size() == 1);
  CHECK(classify_commuting_tuples(FiniteGroup::cyclic(2), 2).size() == 4);
  auto s3 = FiniteGroup::symmetric(3);
  auto classes = classify_commuting_tuples(s3, 2);
  CHECK(classes.size() == 8);
  CHECK(oracles::burnsideCommutingTupleCount(s3, 2) == 8);
}

TEST_CASE("classification count equals the Burnside average") {
  std::vector<GroupRef> groups = {
      FiniteGroup::cyclic(3),       FiniteGroup::cyclic(6),
      FiniteGroup::cyclic(8),       FiniteGroup::symmetric(3),
      FiniteGroup::symmetric(4),    FiniteGroup::dihedral(4),
      FiniteGroup::dihedral(5),     FiniteGroup::dihedral(6),
      FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)),
      FiniteGroup::product(FiniteGroup::cyclic(2),
                           FiniteGroup::symmetric(3))};
  for (const auto& g : groups) {
    for (std::size_t n = 1; n <= 2; ++n) {
      auto classes = classify_commuting_tuples(g, n);
      CHECK(classes.size() ==
            static_cast<std::size_t>(oracles::burnsideCommutingTupleCount(g, n)));
    }
  }
}

TEST_CASE("base change matches the cocycle pullback on abelian targets") {
  auto g = FiniteGroup::cyclic(6);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> tuple = {static_cast<int>(oracles::randInt(0, 5)),
                              static_cast<int>(oracles::randInt(0, 5))};
    auto m = oracles::randomUnimodular(2, 8);
    auto moved = apply_base_change(g, tuple, m);
    // direct pullback: eta(e_i * g) with row-vector convention
    for (int i = 0; i < 2; ++i) {
      long long v = to_int64(m.at(i, 0)) * tuple[0] +
                    to_int64(m.at(i, 1)) * tuple[1];
      CHECK(moved[i] == static_cast<int>(((v % 6) + 6) % 6));
    }
  }
}

TEST_CASE("base change by g then h equals base change by hg") {
  auto s3 = FiniteGroup::symmetric(3);
  auto classes = classify_commuting_tuples(s3, 2);
  auto gens = glnz_generators(2);
  for (const auto& cls : classes)
    for (const auto& g : gens)
      for (const auto& h : gens) {
        auto oneTwo = apply_base_change(
            s3, apply_base_change(s3, cls.tuple, g), h);
        auto combined = apply_base_change(s3, cls.tuple, h * g);
        CHECK(canonical_tuple(s3, oneTwo) == canonical_tuple(s3, combined));
      }
}

TEST_CASE("GL_n(Z) orbits of homs Z^2 -> Z/2") {
  auto c2 = FiniteGroup::cyclic(2);
  auto classes = classify_commuting_tuples(c2, 2);
  REQUIRE(classes.size() == 4);
  auto orbits = glnz_orbits(classes, 2);
  CHECK(orbits.size() == 2);  // trivial and the three nonzero homs
  std::multiset<std::size_t> sizes;
  for (const auto& o : orbits) sizes.insert(o.size());
  CHECK(sizes == std::multiset<std::size_t>({1, 3}));
}

TEST_CASE("GL_2(Z) orbits of commuting pairs in S3: split, quadratic, cubic") {
  auto s3 = FiniteGroup::symmetric(3);
  auto classes = classify_commuting_tuples(s3, 2);
  auto orbits = glnz_orbits(classes, 2);
  CHECK(orbits.size() == 3);
  std::multiset<std::size_t> sizes;
  for (const auto& o : orbits) sizes.insert(o.size());
  CHECK(sizes == std::multiset<std::size_t>({1, 3, 4}));
}

TEST_CASE("GL_1(Z) orbits on Z/3") {
  auto c3 = FiniteGroup::cyclic(3);
  auto classes = classify_commuting_tuples(c3, 1);
  REQUIRE(classes.size() == 3);
  auto orbits = glnz_orbits(classes, 1);
  CHECK(orbits.size() == 2);  // {0} and {1,2}
}
