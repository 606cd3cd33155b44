#pragma once

#include "fin_ab.hpp"
#include "finite_group.hpp"

#include <string>
#include <vector>

namespace loopclass {

/// One of the simple types A..G with its rank; validated on construction.
struct SimpleType {
  char family;
  int rank;

  SimpleType(char f, int r);
  static SimpleType parse(const std::string& s);
  std::string toString() const;
  bool operator==(const SimpleType&) const = default;
  bool operator<(const SimpleType& o) const {
    return family != o.family ? family < o.family : rank < o.rank;
  }
};

/// Center of the simply connected cover together with the outer
/// automorphism group and its action on the center.
struct CenterDatum {
  FinAb center;
  GroupRef out;
  std::vector<FinAbHom> action;  // indexed by out element

  const FinAbHom& actionOf(int outElem) const { return action[outElem]; }
};

CenterDatum lookup(const SimpleType& type);

/// Classification record used to key the curated table: the kind of
/// Dynkin-Tits class plus the fiber data needed for labels.
struct ClassKey {
  enum Kind { Inner, OuterQuadratic, OuterCubic } kind = Inner;
  /// Inner: minimal coset representative q (for cyclic centers) or the
  /// index of the representative (for non-cyclic ones).
  long long q = 0;
  /// Outer classes with a two-element fiber carry a sign.
  int sign = 0;  // 0 = single class, +1 / -1 = quasi-split / not
  std::string name() const;
};

/// Witt-Tits index label for the given classified form.
std::string tits_index(const SimpleType& type, const ClassKey& key);

/// Relative root system label. The inner type A rule is the gcd formula;
/// all other cases come from the curated table. Throws on unknown keys.
std::string relative_type(const SimpleType& type, const ClassKey& key);

struct CatalogRow {
  char family;
  std::string ranks, className, indexTemplate, relativeTemplate;
};

/// The curated table, parsed from the shipped data file.
const std::vector<CatalogRow>& eala2_catalog();

/// Raw text of the shipped catalog (for re-emission checks).
const char* eala2_catalog_text();

}  // namespace loopclass
