#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace loopclass {

/// Degree-3 element of the exterior algebra over F_2 on n generators:
/// a set of 3-element index subsets (coefficients are mod 2).
struct ExteriorElement {
  int nvars = 0;
  std::set<std::array<int, 3>> terms;  // each triple strictly increasing

  bool isZero() const { return terms.empty(); }
  bool operator==(const ExteriorElement&) const = default;
  bool operator<(const ExteriorElement& o) const { return terms < o.terms; }
  std::string toString() const;
};

/// Cup product (a).(b).(c) of the monomial classes with index sets
/// i1, i2, i3 (bitmasks), expanded multilinearly with e_i ^ e_i = 0.
ExteriorElement rost_invariant(int nvars, std::uint32_t i1, std::uint32_t i2,
                               std::uint32_t i3);

/// A torsor class for the split group of type G2 over the rank-n Laurent
/// ring: trivial, or a block-ordered triple of index subsets.
struct G2Class {
  bool trivial = true;
  std::uint32_t i1 = 0, i2 = 0, i3 = 0;

  bool operator==(const G2Class&) const = default;
  std::string toString() const;
};

/// The trivial class plus every block-ordered nonempty triple
/// (max I1 < min I2, max I2 < min I3); invariants are pairwise distinct.
std::vector<G2Class> classify_g2(int nvars);

/// Orbit representatives under base change: the trivial class, plus (for
/// n >= 3) the single orbit of ({1},{2},{3}).
std::vector<G2Class> glnz_quotient_g2(int nvars);

}  // namespace loopclass
