#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "azumaya.hpp"
#include "oracles.hpp"

#include <map>
#include <numeric>
#include <set>

using namespace loopclass;

namespace {

MumfordDatum::Elem unitVec(const MumfordDatum& d, std::size_t i,
                           long long c = 1) {
  MumfordDatum::Elem e(d.rank(), 0);
  e[i] = c;
  return d.reduce(e);
}

}  // namespace

TEST_CASE("phase arithmetic is exact") {
  CHECK(Phase(1, 2) + Phase(1, 2) == Phase::zero());
  CHECK(Phase(1, 3) + Phase(1, 6) == Phase(1, 2));
  CHECK((-Phase(1, 5)) == Phase(4, 5));
  CHECK(Phase(2, 4) == Phase(1, 2));
  CHECK(Phase(3, 6).order() == 2);
}

TEST_CASE("mumford generators: chain (2) in degree 2") {
  MumfordDatum datum({2});
  auto gens = mumford_generators(datum, 2);
  REQUIRE(gens.size() == 1);
  const auto& a = gens[0].first;
  const auto& b = gens[0].second;
  // a = [[0,1],[1,0]] as a permutation matrix with trivial phases
  CHECK(a.perm() == std::vector<int>({1, 0}));
  CHECK(a.phases() == std::vector<Phase>(2));
  // b = diag(1, -1)
  CHECK(b.perm() == std::vector<int>({0, 1}));
  CHECK(b.phases() == std::vector<Phase>({Phase::zero(), Phase(1, 2)}));
  // b a = - a b
  CHECK(b * a == (a * b).scaled(Phase(1, 2)));
}

TEST_CASE("mumford generators: commutator phase 1/3 for chain (3)") {
  MumfordDatum datum({3});
  auto gens = mumford_generators(datum, 3);
  CHECK(commutator_phase(gens[0].first, gens[0].second) == Phase(1, 3));
}

TEST_CASE("mumford generators: cross-block commutators are trivial") {
  MumfordDatum datum({2, 2});
  auto gens = mumford_generators(datum, 4);
  REQUIRE(gens.size() == 2);
  CHECK(commutator_phase(gens[0].first, gens[1].first).isZero());
  CHECK(commutator_phase(gens[0].first, gens[1].second).isZero());
  CHECK(commutator_phase(gens[0].second, gens[1].second).isZero());
  CHECK(commutator_phase(gens[0].first, gens[0].second) == Phase(1, 2));
}

TEST_CASE("mumford block relation holds exactly for all orders up to 6") {
  for (long long s = 2; s <= 6; ++s) {
    MumfordDatum datum({s});
    auto gens = mumford_generators(datum, s);
    CHECK(commutator_phase(gens[0].first, gens[0].second) == Phase(1, s));
  }
  // and inside a padded embedding
  MumfordDatum datum({2});
  auto gens = mumford_generators(datum, 6);
  CHECK(commutator_phase(gens[0].first, gens[0].second) == Phase(1, 2));
}

TEST_CASE("abstract pairing agrees with matrix commutator phases") {
  for (const auto& chain : std::vector<std::vector<long long>>{
           {2}, {3}, {4}, {5}, {6}, {2, 2}, {2, 4}, {2, 6}, {3, 3}, {3, 6}}) {
    MumfordDatum datum(chain);
    long long d = 1;
    for (long long s : chain) d *= s;
    auto gens = mumford_generators(datum, d);
    std::vector<MonomialMatrix> lifted;
    for (const auto& [a, b] : gens) {
      lifted.push_back(a);
      lifted.push_back(b);
    }
    for (std::size_t i = 0; i < datum.rank(); ++i)
      for (std::size_t j = 0; j < datum.rank(); ++j) {
        Phase abstract = datum.pairing(unitVec(datum, i), unitVec(datum, j));
        Phase concrete = commutator_phase(lifted[i], lifted[j]);
        CHECK(abstract == concrete);
      }
  }
}

TEST_CASE("pairing is alternating and bilinear") {
  MumfordDatum datum({2, 4});
  for (int trial = 0; trial < 30; ++trial) {
    auto rnd = [&]() {
      MumfordDatum::Elem e(datum.rank());
      for (auto& v : e) v = oracles::randInt(0, 7);
      return datum.reduce(e);
    };
    auto x = rnd(), y = rnd(), z = rnd();
    CHECK(datum.pairing(x, x).isZero());
    CHECK(datum.pairing(x, y) == -datum.pairing(y, x));
    MumfordDatum::Elem xz(datum.rank());
    for (std::size_t i = 0; i < x.size(); ++i) xz[i] = x[i] + z[i];
    CHECK(datum.pairing(datum.reduce(xz), y) ==
          datum.pairing(x, y) + datum.pairing(z, y));
  }
}

TEST_CASE("irreducibility is the full-product condition") {
  CHECK(is_irreducible(MumfordDatum({2}), 2));
  CHECK_FALSE(is_irreducible(MumfordDatum({2}), 4));
  CHECK(is_irreducible(MumfordDatum({2, 2}), 4));
  CHECK_THROWS_AS(is_irreducible(MumfordDatum({2}), 3),
                  std::invalid_argument);
}

TEST_CASE("brussel normal form examples") {
  MumfordDatum c2({2});
  auto a = unitVec(c2, 0);
  auto b = unitVec(c2, 1);
  auto f = brussel_normal_form(c2, {a, b});
  CHECK(f == BrusselForm{2, {2}, 1});
  CHECK(f.name() == "A(1,2)");

  MumfordDatum c5({5});
  auto a5 = unitVec(c5, 0);
  auto b53 = unitVec(c5, 1, 3);
  auto f5 = brussel_normal_form(c5, {a5, b53});
  CHECK(f5 == BrusselForm{2, {5}, 2});
  CHECK(f5.name() == "A(2,5)");

  // nullity 3 with a zero slot: r1 normalizes to 1
  auto f53 = brussel_normal_form(
      c5, {a5, unitVec(c5, 1), MumfordDatum::Elem(c5.rank(), 0)});
  CHECK(f53 == BrusselForm{3, {5}, 1});

  // non-generating tuples are rejected
  CHECK_THROWS_AS(brussel_normal_form(c2, {a, a}), std::invalid_argument);
}

TEST_CASE("delta is well-defined modulo the block moduli") {
  MumfordDatum datum({2, 4});
  std::vector<MumfordDatum::Elem> tuple = {
      unitVec(datum, 0), unitVec(datum, 1), unitVec(datum, 2),
      unitVec(datum, 3, 3)};
  auto base = brussel_normal_form(datum, tuple);
  auto mods = datum.moduli();
  for (int trial = 0; trial < 25; ++trial) {
    auto perturbed = tuple;
    std::size_t who = oracles::randInt(0, tuple.size() - 1);
    std::size_t coord = oracles::randInt(0, datum.rank() - 1);
    perturbed[who][coord] += mods[coord] * oracles::randInt(-2, 2);
    CHECK(brussel_normal_form(datum, perturbed) == base);
  }
}

namespace {

// All pairing-preserving automorphisms of (Z/s)^2, i.e. SL_2(Z/s), by
// closure from the elementary transvections.
std::vector<std::array<long long, 4>> symplecticAutomorphisms(long long s) {
  auto mul = [&](const std::array<long long, 4>& a,
                 const std::array<long long, 4>& b) {
    return std::array<long long, 4>{
        (a[0] * b[0] + a[1] * b[2]) % s, (a[0] * b[1] + a[1] * b[3]) % s,
        (a[2] * b[0] + a[3] * b[2]) % s, (a[2] * b[1] + a[3] * b[3]) % s};
  };
  std::array<long long, 4> id{1, 0, 0, 1};
  std::vector<std::array<long long, 4>> gens = {{1, 1, 0, 1},
                                                {1, 0, 1, 1}};
  std::set<std::array<long long, 4>> seen{id};
  std::vector<std::array<long long, 4>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::array<long long, 4>> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        auto p = mul(m, g);
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

TEST_CASE("delta is invariant under pairing-preserving automorphisms") {
  for (long long s : {2, 3}) {
    MumfordDatum datum({s});
    auto auts = symplecticAutomorphisms(s);
    // sanity: |SL_2(Z/2)| = 6, |SL_2(Z/3)| = 24
    CHECK(auts.size() == (s == 2 ? 6 : 24));
    std::vector<MumfordDatum::Elem> tuple = {unitVec(datum, 0),
                                             unitVec(datum, 1, 1)};
    auto base = brussel_normal_form(datum, tuple);
    for (const auto& u : auts) {
      // verify u preserves the pairing, then apply it to the tuple
      auto apply = [&](const MumfordDatum::Elem& e) {
        return datum.reduce({u[0] * e[0] + u[1] * e[1],
                             u[2] * e[0] + u[3] * e[1]});
      };
      CHECK(datum.pairing(apply(unitVec(datum, 0)), apply(unitVec(datum, 1))) ==
            datum.pairing(unitVec(datum, 0), unitVec(datum, 1)));
      std::vector<MumfordDatum::Elem> moved = {apply(tuple[0]),
                                               apply(tuple[1])};
      CHECK(brussel_normal_form(datum, moved) == base);
    }
  }
}

TEST_CASE("cyclic presentations") {
  CHECK(cyclic_presentation(BrusselForm{2, {2}, 1}).size() == 1);
  auto p = cyclic_presentation(BrusselForm{2, {2}, 1})[0];
  CHECK(p.toString() == "(X^2 = t1, Y^2 = t2, YX = zeta_2 XY)");
  auto p5 = cyclic_presentation(BrusselForm{2, {5}, 2})[0];
  CHECK(p5.toString() == "(X^5 = t1, Y^5 = t2^2, YX = zeta_5 XY)");
  auto blocks = cyclic_presentation(BrusselForm{4, {2, 3}, 1});
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].toString() == "(X^2 = t1, Y^2 = t2, YX = zeta_2 XY)");
  CHECK(blocks[1].toString() == "(X^3 = t3, Y^3 = t4, YX = zeta_3 XY)");
}

TEST_CASE("primary decomposition metadata") {
  auto parts = primary_decomposition(BrusselForm{2, {6}, 1});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 2);
  CHECK(parts[0].second.chain == std::vector<long long>{2});
  CHECK(parts[1].first == 3);
  CHECK(parts[1].second.chain == std::vector<long long>{3});
}

TEST_CASE("multiloop oracle at degree 2") {
  MumfordDatum datum({2});
  auto a = unitVec(datum, 0);
  auto b = unitVec(datum, 1);
  CHECK(multiloop_oracle_d2(datum, {a, b}));
  // swapped generators realize the same algebra
  CHECK(multiloop_oracle_d2(datum, {b, a}));
  // the mixed generating pair
  CHECK(multiloop_oracle_d2(datum, {a, datum.reduce({1, 1})}));
  CHECK_THROWS_AS(multiloop_oracle_d2(datum, {a, a}), std::invalid_argument);
}

TEST_CASE("real degree-d classification over one variable") {
  CHECK(real_nullity1_table(1).size() == 1);
  CHECK(real_nullity1_table(3).size() == 1);
  CHECK(real_nullity1_table(3)[0].brauerLabel == "0+0");
  auto d2 = real_nullity1_table(2);
  REQUIRE(d2.size() == 4);
  CHECK(d2[0].quaternionLabel == "(1,1)");
  CHECK(d2[1].quaternionLabel == "(1,t)");
  CHECK(d2[2].quaternionLabel == "(-1,-1)");
  CHECK(d2[3].quaternionLabel == "(-1,t)");
  CHECK(real_nullity1_table(4).size() == 4);
  CHECK(real_nullity1_table(4)[3].brauerLabel == "(-1,-1)+chi");
}

namespace {

/// Brute-force equivalence oracle for nullity-2 generating pairs in the
/// chain-(d) datum: orbits under base change (mod the exponent) combined
/// with pairing-preserving automorphisms.
std::vector<std::set<std::vector<long long>>> bruteOrbits(long long d) {
  MumfordDatum datum({d});
  // all generating pairs, flattened to (x0,x1,y0,y1)
  std::set<std::vector<long long>> all;
  for (long long x0 = 0; x0 < d; ++x0)
    for (long long x1 = 0; x1 < d; ++x1)
      for (long long y0 = 0; y0 < d; ++y0)
        for (long long y1 = 0; y1 < d; ++y1) {
          std::vector<MumfordDatum::Elem> t = {{x0, x1}, {y0, y1}};
          if (datum.tupleGenerates(t)) all.insert({x0, x1, y0, y1});
        }
  auto auts = symplecticAutomorphisms(d);
  auto gens = glnz_generators(2);
  std::vector<std::set<std::vector<long long>>> orbits;
  std::set<std::vector<long long>> seen;
  for (const auto& start : all) {
    if (seen.count(start)) continue;
    std::set<std::vector<long long>> orbit{start};
    std::vector<std::vector<long long>> frontier{start};
    while (!frontier.empty()) {
      std::vector<std::vector<long long>> next;
      for (const auto& cur : frontier) {
        std::vector<std::vector<long long>> moves;
        // base change: tuple_i -> sum_j g_ij tuple_j
        for (const auto& g : gens) {
          std::vector<long long> m(4);
          for (int i = 0; i < 2; ++i)
            for (int c = 0; c < 2; ++c) {
              long long acc = 0;
              for (int j = 0; j < 2; ++j)
                acc += to_int64(g.at(i, j)) * cur[2 * j + c];
              m[2 * i + c] = ((acc % d) + d) % d;
            }
          moves.push_back(m);
        }
        // pairing-preserving automorphisms applied to both entries
        for (const auto& u : auts) {
          std::vector<long long> m(4);
          for (int i = 0; i < 2; ++i) {
            m[2 * i] = (u[0] * cur[2 * i] + u[1] * cur[2 * i + 1]) % d;
            m[2 * i + 1] = (u[2] * cur[2 * i] + u[3] * cur[2 * i + 1]) % d;
          }
          moves.push_back(m);
        }
        for (auto& m : moves)
          if (orbit.insert(m).second) next.push_back(m);
      }
      frontier = std::move(next);
    }
    seen.insert(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

TEST_CASE("brute-force orbits coincide with the normal-form fibers") {
  for (long long d : {2, 3, 4, 5}) {
    MumfordDatum datum({d});
    auto orbits = bruteOrbits(d);
    // each orbit carries a constant normal form; distinct orbits differ
    std::set<BrusselForm> forms;
    std::map<std::vector<long long>, BrusselForm> formOf;
    for (const auto& orbit : orbits) {
      std::set<long long> r1s;
      std::set<std::vector<long long>> chains;
      for (const auto& t : orbit) {
        auto f = brussel_normal_form(
            datum, {{t[0], t[1]}, {t[2], t[3]}});
        r1s.insert(f.r1);
        chains.insert(f.chain);
      }
      CHECK(chains == std::set<std::vector<long long>>{{d}});
      CHECK(r1s.size() == 1);
      BrusselForm f{2, {d}, *r1s.begin()};
      CHECK_FALSE(forms.count(f));
      forms.insert(f);
    }
    // the expected fiber count: units modulo +-1
    std::set<long long> expected;
    for (long long r = 1; r < d; ++r)
      if (std::gcd(r, d) == 1) expected.insert(std::min(r, d - r));
    CHECK(forms.size() == expected.size());
    CHECK(orbits.size() == expected.size());
  }
}

TEST_CASE("oracle confirms (a,3b) ~ (2a,b) and (a,3b) !~ (a,b) for d=5") {
  // bounded word search: the brute orbit of (a,3b) must contain (2a,b)
  // and avoid (a,b)
  auto orbits = bruteOrbits(5);
  const std::vector<long long> a3b{1, 0, 0, 3};
  const std::vector<long long> a2_b{2, 0, 0, 1};
  const std::vector<long long> ab{1, 0, 0, 1};
  for (const auto& orbit : orbits) {
    if (orbit.count(a3b)) {
      CHECK(orbit.count(a2_b) == 1);
      CHECK(orbit.count(ab) == 0);
    }
  }
}
