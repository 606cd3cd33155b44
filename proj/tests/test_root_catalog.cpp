#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "root_catalog.hpp"

#include <set>

using namespace loopclass;

TEST_CASE("simple type validation") {
  CHECK_NOTHROW(SimpleType('D', 3));
  CHECK_THROWS_AS(SimpleType('D', 2), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType('E', 9), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType('C', 2), std::invalid_argument);
  CHECK(SimpleType::parse("A4") == SimpleType('A', 4));
  CHECK_THROWS_AS(SimpleType::parse("X2"), std::invalid_argument);
}

TEST_CASE("center data: E8, A3, D6") {
  auto e8 = lookup(SimpleType::parse("E8"));
  CHECK(e8.center == FinAb::trivial());
  CHECK(e8.out->size() == 1);

  auto a3 = lookup(SimpleType::parse("A3"));
  CHECK(a3.center == FinAb::cyclic(4));
  CHECK(a3.out->size() == 2);
  CHECK(a3.actionOf(1) == FinAbHom::scalar(a3.center, -1));

  auto d6 = lookup(SimpleType::parse("D6"));
  CHECK(d6.center == FinAb::fromModuli({2, 2}));
  CHECK(d6.out->size() == 2);
  CHECK(d6.actionOf(1).apply({1, 0}) == FinAb::Elem{0, 1});
}

TEST_CASE("D4 center data: S3 permutes the nonzero center elements") {
  auto d4 = lookup(SimpleType::parse("D4"));
  CHECK(d4.out->size() == 6);
  // faithful: distinct out elements act differently
  std::set<std::vector<long long>> images;
  for (std::size_t u = 0; u < 6; ++u) {
    std::vector<long long> img;
    for (const auto& x : d4.center.elements()) {
      auto y = d4.actionOf(static_cast<int>(u)).apply(x);
      img.insert(img.end(), y.begin(), y.end());
    }
    images.insert(img);
  }
  CHECK(images.size() == 6);
  // orbit of a nonzero vector under all of S3 = all three nonzero vectors
  std::set<FinAb::Elem> orbit;
  for (std::size_t u = 0; u < 6; ++u)
    orbit.insert(d4.actionOf(static_cast<int>(u)).apply({1, 0}));
  CHECK(orbit.size() == 3);
}

TEST_CASE("relative type: split classes give the absolute type") {
  for (const char* t : {"A4", "B3", "C4", "D4", "D5", "D6", "E6", "E7", "E8",
                        "F4", "G2"}) {
    SimpleType type = SimpleType::parse(t);
    ClassKey split{ClassKey::Inner, 0, 0};
    std::string rel = relative_type(type, split);
    CHECK(rel == std::string(1, type.family) + "_" +
                     std::to_string(type.rank));
  }
}

TEST_CASE("relative type: inner type A gcd rule") {
  SimpleType a4 = SimpleType::parse("A4");
  CHECK(relative_type(a4, ClassKey{ClassKey::Inner, 0, 0}) == "A_4");
  CHECK(relative_type(a4, ClassKey{ClassKey::Inner, 1, 0}) == "A_0");
  CHECK(tits_index(a4, ClassKey{ClassKey::Inner, 1, 0}) == "^1A^{(5)}_{4,0}");
}

TEST_CASE("relative type: E7 nontrivial class is F4") {
  SimpleType e7 = SimpleType::parse("E7");
  ClassKey g1{ClassKey::Inner, 1, 0};
  CHECK(relative_type(e7, g1) == "F_4");
  CHECK(tits_index(e7, g1) == "E^{9}_{7,4}");
}

TEST_CASE("unknown keys are rejected") {
  SimpleType d3 = SimpleType::parse("D3");
  CHECK_THROWS_AS(relative_type(d3, ClassKey{ClassKey::Inner, 0, 0}),
                  std::invalid_argument);
  SimpleType e8 = SimpleType::parse("E8");
  CHECK_THROWS_AS(relative_type(e8, ClassKey{ClassKey::OuterQuadratic, 0, 1}),
                  std::invalid_argument);
}

TEST_CASE("catalog text parses into the table row for row") {
  const auto& rows = eala2_catalog();
  CHECK(rows.size() == 35);
  // spot checks against the shipped file
  CHECK(rows.front().family == 'A');
  CHECK(rows.front().indexTemplate == "^1A^{(1)}_{1,1}");
  CHECK(rows.back().family == 'G');
  CHECK(rows.back().relativeTemplate == "G_2");
}
