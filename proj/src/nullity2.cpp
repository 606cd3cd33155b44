#include "nullity2.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace loopclass {

namespace {

/// Discrete log of x in the cyclic subgroup generated by c (orders <= 3
/// here); returns 0 for the identity.
int powerIndex(const GroupRef& g, int c, int x) {
  int acc = g->identity();
  for (int e = 0; e < static_cast<int>(g->size()) + 1; ++e) {
    if (acc == x) return e;
    acc = g->mul(acc, c);
  }
  throw internal_error("element not a power of the given generator");
}

DynkinTitsClass labelClass(const LoopClass& cls) {
  const GroupRef& out = cls.target;
  int a = cls.tuple[0], b = cls.tuple[1];
  DynkinTitsClass dt{cls, ClassKey::Inner, 0, 0};
  if (a == out->identity() && b == out->identity()) return dt;
  long long order = 1;
  for (int x : {a, b}) order = std::max(order, out->elementOrder(x));
  if (order == 2) {
    dt.kind = ClassKey::OuterQuadratic;
    dt.i = a != out->identity();
    dt.j = b != out->identity();
  } else if (order == 3) {
    dt.kind = ClassKey::OuterCubic;
    // exponents with respect to the smallest-index element of order 3
    int c = -1;
    for (std::size_t x = 0; x < out->size() && c < 0; ++x)
      if (out->elementOrder(static_cast<int>(x)) == 3)
        c = static_cast<int>(x);
    dt.i = powerIndex(out, c, a);
    dt.j = powerIndex(out, c, b);
  } else {
    throw internal_error("unexpected outer class order");
  }
  return dt;
}

ZnModule twistedCenter(const CenterDatum& cd, const LoopClass& outHom) {
  return ZnModule(cd.center, {cd.actionOf(outHom.tuple[0]),
                              cd.actionOf(outHom.tuple[1])});
}

/// Elements of out commuting with both tuple entries.
std::vector<int> centralizerOfImage(const GroupRef& out,
                                    const LoopClass& cls) {
  std::vector<int> zs;
  for (std::size_t u = 0; u < out->size(); ++u) {
    bool ok = true;
    for (int t : cls.tuple)
      if (out->mul(static_cast<int>(u), t) != out->mul(t, static_cast<int>(u)))
        ok = false;
    if (ok) zs.push_back(static_cast<int>(u));
  }
  return zs;
}

std::vector<std::vector<FinAb::Elem>> orbitPartition(
    const FinAb& g, const std::vector<FinAbHom>& maps) {
  std::vector<std::vector<FinAb::Elem>> orbits;
  std::set<FinAb::Elem> seen;
  for (const auto& start : g.elements()) {
    if (seen.count(start)) continue;
    std::set<FinAb::Elem> orbit{start};
    std::vector<FinAb::Elem> frontier{start};
    while (!frontier.empty()) {
      std::vector<FinAb::Elem> next;
      for (const auto& x : frontier)
        for (const auto& m : maps) {
          auto y = m.apply(x);
          if (orbit.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    seen.insert(orbit.begin(), orbit.end());
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  // orbit lists are sorted (set order); orbits sorted by their minimum
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return orbits;
}

bool lessDt(const DynkinTitsClass& a, const DynkinTitsClass& b) {
  auto key = [](const DynkinTitsClass& d) {
    return std::tuple<int, int, int>(static_cast<int>(d.kind), d.i, d.j);
  };
  return key(a) < key(b);
}

}  // namespace

std::string DynkinTitsClass::label() const {
  switch (kind) {
    case ClassKey::Inner:
      return "split";
    case ClassKey::OuterQuadratic:
      return "quad(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case ClassKey::OuterCubic:
      return "cubic(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return "?";
}

std::vector<LoopFormR2> classify_r2(const SimpleType& type) {
  CenterDatum cd = lookup(type);
  auto classes = classify_commuting_tuples(cd.out, 2);
  std::vector<DynkinTitsClass> dts;
  for (const auto& c : classes) dts.push_back(labelClass(c));
  std::sort(dts.begin(), dts.end(), lessDt);

  std::vector<LoopFormR2> out;
  for (const auto& dt : dts) {
    ZnModule m = twistedCenter(cd, dt.outHom);
    auto h2 = koszul_cohomology(m, 2);
    std::vector<FinAbHom> autos;
    for (int u : centralizerOfImage(cd.out, dt.outHom))
      autos.push_back(equivariant_action_on_h(m, 2, cd.actionOf(u)));
    for (const auto& orbit : orbitPartition(h2.group(), autos)) {
      const FinAb::Elem& rep = orbit.front();
      out.push_back(LoopFormR2{type, dt, h2.group(), rep,
                               h2.group().isZeroElem(rep)});
    }
  }
  return out;
}

std::vector<LoopFormK> classify_k(const SimpleType& type) {
  CenterDatum cd = lookup(type);
  auto classes = classify_commuting_tuples(cd.out, 2);
  auto orbits = glnz_orbits(classes, 2);

  // orbit representatives, ordered split < quadratic < cubic
  std::vector<DynkinTitsClass> reps;
  for (const auto& orbit : orbits) reps.push_back(labelClass(classes[orbit.front()]));
  std::sort(reps.begin(), reps.end(), lessDt);

  std::vector<LoopFormK> out;
  for (const auto& dt : reps) {
    ZnModule m = twistedCenter(cd, dt.outHom);
    auto h2 = koszul_cohomology(m, 2);
    if (dt.kind == ClassKey::Inner) {
      // the full base-change action on the inner fiber is by determinants;
      // combine with the outer quotient
      std::vector<FinAbHom> autos;
      for (int u : centralizerOfImage(cd.out, dt.outHom))
        autos.push_back(equivariant_action_on_h(m, 2, cd.actionOf(u)));
      autos.push_back(
          glnz_action_on_h2(m, IntMatrix::fromRows({{1, 0}, {0, -1}})));
      auto parts = orbitPartition(h2.group(), autos);
      for (std::size_t q = 0; q < parts.size(); ++q) {
        const FinAb::Elem& rep = parts[q].front();
        LoopFormK f{type,
                    ClassKey{ClassKey::Inner, static_cast<long long>(q), 0},
                    dt.label(),
                    h2.group(),
                    rep,
                    h2.group().isZeroElem(rep)};
        out.push_back(std::move(f));
      }
    } else {
      // Twisted fibers in every supported family have at most two
      // elements, so the stabilizer acts by group automorphisms of a group
      // with trivial automorphism group; classes survive unchanged, with
      // the quasi-split (neutral) class labelled +.
      if (h2.group().order() > 2)
        throw internal_error(
            "twisted fiber with nontrivial automorphisms is unsupported");
      bool pair = h2.group().order() == 2;
      for (const auto& elem : h2.group().elements()) {
        bool qs = h2.group().isZeroElem(elem);
        LoopFormK f{type,
                    ClassKey{dt.kind, 0, pair ? (qs ? +1 : -1) : 0},
                    dt.label(),
                    h2.group(),
                    elem,
                    qs};
        out.push_back(std::move(f));
      }
    }
  }
  // quasi-split first within each outer family (g+ before g-)
  std::stable_sort(out.begin(), out.end(),
                   [](const LoopFormK& a, const LoopFormK& b) {
                     if (a.key.kind != b.key.kind)
                       return a.key.kind < b.key.kind;
                     if (a.key.kind == ClassKey::Inner)
                       return a.key.q < b.key.q;
                     return a.key.sign > b.key.sign;
                   });
  return out;
}

std::vector<ClassRow> eala_table(const std::vector<SimpleType>& types) {
  std::vector<ClassRow> rows;
  for (const auto& type : types) {
    for (const auto& f : classify_k(type)) {
      ClassKey key = f.key;
      std::string name = key.name();
      if (type.family == 'D' && type.rank == 4 &&
          key.kind == ClassKey::OuterQuadratic)
        name = key.sign > 0 ? "E2g+" : "E2g-";
      rows.push_back(ClassRow{type, name, tits_index(type, key),
                              relative_type(type, key), f.quasisplit});
    }
  }
  return rows;
}

std::vector<SimpleType> eala_default_types() {
  std::vector<SimpleType> out;
  for (const char* s :
       {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "C3", "C4", "C5", "C6",
        "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8", "F4", "G2"})
    out.push_back(SimpleType::parse(s));
  return out;
}

}  // namespace loopclass
