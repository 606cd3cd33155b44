#include "g2.hpp"

#include "int_matrix.hpp"
#include "quadratic_forms.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace loopclass {

std::string ExteriorElement::toString() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    os << (first ? "" : " + ") << "e" << (t[0] + 1) << "^e" << (t[1] + 1)
       << "^e" << (t[2] + 1);
    first = false;
  }
  return os.str();
}

ExteriorElement rost_invariant(int nvars, std::uint32_t i1, std::uint32_t i2,
                               std::uint32_t i3) {
  if (nvars < 0 || nvars > 20)
    throw std::invalid_argument("rost_invariant: bad variable count");
  for (std::uint32_t m : {i1, i2, i3})
    if (m >= (1u << nvars))
      throw std::invalid_argument("rost_invariant: index out of range");
  ExteriorElement out;
  out.nvars = nvars;
  for (int a = 0; a < nvars; ++a) {
    if (!(i1 & (1u << a))) continue;
    for (int b = 0; b < nvars; ++b) {
      if (!(i2 & (1u << b))) continue;
      for (int c = 0; c < nvars; ++c) {
        if (!(i3 & (1u << c))) continue;
        if (a == b || b == c || a == c) continue;  // e_i ^ e_i = 0
        std::array<int, 3> t{a, b, c};
        std::sort(t.begin(), t.end());  // signs are trivial mod 2
        auto it = out.terms.find(t);
        if (it == out.terms.end())
          out.terms.insert(t);
        else
          out.terms.erase(it);
      }
    }
  }
  return out;
}

std::string G2Class::toString() const {
  if (trivial) return "1";
  auto part = [](std::uint32_t m) { return monomialName(m); };
  return "(" + part(i1) + "," + part(i2) + "," + part(i3) + ")";
}

std::vector<G2Class> classify_g2(int nvars) {
  if (nvars < 0 || nvars > 16)
    throw std::invalid_argument("classify_g2: bad variable count");
  std::vector<G2Class> out{G2Class{}};
  // block-ordered triples: choose cut points inside each support set
  std::uint32_t all = nvars >= 32 ? ~0u : (1u << nvars) - 1;
  for (std::uint32_t support = 1; support <= all; ++support) {
    std::vector<int> bits;
    for (int i = 0; i < nvars; ++i)
      if (support & (1u << i)) bits.push_back(i);
    std::size_t u = bits.size();
    if (u < 3) continue;
    for (std::size_t cut1 = 1; cut1 + 1 < u + 1; ++cut1)
      for (std::size_t cut2 = cut1 + 1; cut2 < u; ++cut2) {
        std::uint32_t m1 = 0, m2 = 0, m3 = 0;
        for (std::size_t i = 0; i < cut1; ++i) m1 |= 1u << bits[i];
        for (std::size_t i = cut1; i < cut2; ++i) m2 |= 1u << bits[i];
        for (std::size_t i = cut2; i < u; ++i) m3 |= 1u << bits[i];
        out.push_back(G2Class{false, m1, m2, m3});
      }
  }
  // canonical classes must have pairwise distinct invariants
  std::set<ExteriorElement> seen;
  for (const auto& c : out) {
    auto inv = c.trivial ? ExteriorElement{nvars, {}}
                         : rost_invariant(nvars, c.i1, c.i2, c.i3);
    if (!seen.insert(inv).second)
      throw internal_error("classify_g2: repeated invariant");
  }
  return out;
}

namespace {

std::uint32_t actOnCharacter(std::uint32_t mask, const IntMatrix& g,
                             int nvars) {
  // character values a(e_i); pullback along the row action is a -> g.a mod 2
  std::uint32_t out = 0;
  for (int i = 0; i < nvars; ++i) {
    long long acc = 0;
    for (int j = 0; j < nvars; ++j)
      if (mask & (1u << j)) acc += to_int64(g.at(i, j));
    if (((acc % 2) + 2) % 2) out |= 1u << i;
  }
  return out;
}

}  // namespace

std::vector<G2Class> glnz_quotient_g2(int nvars) {
  auto classes = classify_g2(nvars);
  if (nvars < 3) return {G2Class{}};
  // Classes are identified with their invariants. The block-ordered list
  // is not closed under base change (a moved triple can land on a class
  // outside it), so the BFS grows the state space as it discovers new
  // invariants; every discovered state stays inside the orbit that found
  // it, which is all the quotient needs.
  auto gens = glnz_generators(static_cast<std::size_t>(nvars));
  {
    std::size_t count = gens.size();
    for (std::size_t i = 0; i < count; ++i)
      gens.push_back(unimodular_inverse(gens[i]));
  }
  std::map<ExteriorElement, std::size_t> orbitOf;  // invariant -> orbit id
  std::vector<G2Class> out;
  for (const auto& start : classes) {
    auto startInv = start.trivial
                        ? ExteriorElement{nvars, {}}
                        : rost_invariant(nvars, start.i1, start.i2, start.i3);
    if (orbitOf.count(startInv)) continue;
    std::size_t id = out.size();
    out.push_back(start);
    orbitOf[startInv] = id;
    std::vector<std::array<std::uint32_t, 3>> frontier{
        {start.i1, start.i2, start.i3}};
    while (!frontier.empty()) {
      std::vector<std::array<std::uint32_t, 3>> next;
      for (const auto& cur : frontier)
        for (const auto& g : gens) {
          std::array<std::uint32_t, 3> moved{
              actOnCharacter(cur[0], g, nvars),
              actOnCharacter(cur[1], g, nvars),
              actOnCharacter(cur[2], g, nvars)};
          auto inv = rost_invariant(nvars, moved[0], moved[1], moved[2]);
          auto ins = orbitOf.emplace(inv, id);
          if (ins.second) {
            next.push_back(moved);
          } else if (ins.first->second != id) {
            throw internal_error("glnz_quotient_g2: orbits collided");
          }
        }
      frontier = std::move(next);
    }
  }
  return out;
}

}  // namespace loopclass
