#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "g2.hpp"
#include "oracles.hpp"

#include <map>
#include <set>

using namespace loopclass;

TEST_CASE("rost invariant examples") {
  // repeated index annihilates
  CHECK(rost_invariant(2, 0b01, 0b01, 0b10).isZero());
  // (t1, t2, t3) -> e1 ^ e2 ^ e3
  auto v = rost_invariant(3, 0b001, 0b010, 0b100);
  CHECK(v.terms == std::set<std::array<int, 3>>{{0, 1, 2}});
  // (t1, t2, t3 t4) expands into two terms
  auto w = rost_invariant(4, 0b0001, 0b0010, 0b1100);
  CHECK(w.terms ==
        std::set<std::array<int, 3>>({{0, 1, 2}, {0, 1, 3}}));
}

TEST_CASE("rost invariant is trilinear over F_2") {
  int n = 4;
  for (int trial = 0; trial < 60; ++trial) {
    auto rnd = [&]() {
      return static_cast<std::uint32_t>(oracles::randInt(0, (1 << n) - 1));
    };
    std::uint32_t a1 = rnd(), a2 = rnd(), b = rnd(), c = rnd();
    // additivity in the first slot: inv(a1+a2,b,c) = inv(a1,b,c)+inv(a2,b,c)
    auto lhs = rost_invariant(n, a1 ^ a2, b, c);
    auto r1 = rost_invariant(n, a1, b, c);
    auto r2 = rost_invariant(n, a2, b, c);
    std::set<std::array<int, 3>> sum;
    std::set_symmetric_difference(r1.terms.begin(), r1.terms.end(),
                                  r2.terms.begin(), r2.terms.end(),
                                  std::inserter(sum, sum.begin()));
    CHECK(lhs.terms == sum);
  }
}

TEST_CASE("classification counts: 1, 2, 8 classes for n = 2, 3, 4") {
  CHECK(classify_g2(2).size() == 1);
  CHECK(classify_g2(3).size() == 2);
  CHECK(classify_g2(4).size() == 1 + 7);
}

TEST_CASE("canonical classes have pairwise distinct invariants up to n = 5") {
  for (int n = 0; n <= 5; ++n) {
    auto classes = classify_g2(n);
    std::set<ExteriorElement> invs;
    for (const auto& c : classes)
      invs.insert(c.trivial ? ExteriorElement{n, {}}
                            : rost_invariant(n, c.i1, c.i2, c.i3));
    CHECK(invs.size() == classes.size());
  }
}

TEST_CASE("nonvanishing criterion: nonzero invariants = base-change orbit "
          "of the block-ordered classes") {
  for (int n = 2; n <= 4; ++n) {
    // orbit closure of the canonical nontrivial classes under GL_n mod 2,
    // acting on the three characters entrywise
    auto gens = loopclass::glnz_generators(static_cast<std::size_t>(n));
    std::set<std::array<std::uint32_t, 3>> closure;
    std::vector<std::array<std::uint32_t, 3>> frontier;
    for (const auto& c : classify_g2(n))
      if (!c.trivial) {
        closure.insert({c.i1, c.i2, c.i3});
        frontier.push_back({c.i1, c.i2, c.i3});
      }
    auto act = [&](std::uint32_t mask, const loopclass::IntMatrix& g) {
      std::uint32_t out = 0;
      for (int i = 0; i < n; ++i) {
        long long acc = 0;
        for (int j = 0; j < n; ++j)
          if (mask & (1u << j)) acc += loopclass::to_int64(g.at(i, j));
        if (((acc % 2) + 2) % 2) out |= 1u << i;
      }
      return out;
    };
    while (!frontier.empty()) {
      std::vector<std::array<std::uint32_t, 3>> next;
      for (const auto& t : frontier)
        for (const auto& g : gens) {
          std::array<std::uint32_t, 3> moved{act(t[0], g), act(t[1], g),
                                             act(t[2], g)};
          if (closure.insert(moved).second) next.push_back(moved);
        }
      frontier = std::move(next);
    }
    std::set<ExteriorElement> orbitInvs;
    for (const auto& t : closure)
      orbitInvs.insert(rost_invariant(n, t[0], t[1], t[2]));
    // brute force over all triples: invariant nonzero iff in the orbit
    for (std::uint32_t a = 0; a < (1u << n); ++a)
      for (std::uint32_t b = 0; b < (1u << n); ++b)
        for (std::uint32_t c = 0; c < (1u << n); ++c) {
          auto inv = rost_invariant(n, a, b, c);
          CHECK(!inv.isZero() == (orbitInvs.count(inv) == 1));
        }
  }
}

TEST_CASE("base-change quotient: exactly two orbits for n >= 3") {
  CHECK(glnz_quotient_g2(2).size() == 1);
  auto q3 = glnz_quotient_g2(3);
  REQUIRE(q3.size() == 2);
  CHECK(q3[0].trivial);
  CHECK(q3[1].toString() == "(t1,t2,t3)");
  CHECK(glnz_quotient_g2(4).size() == 2);
  CHECK(glnz_quotient_g2(5).size() == 2);
}
