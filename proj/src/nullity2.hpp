#pragma once

#include "koszul.hpp"
#include "root_catalog.hpp"

#include <string>
#include <vector>

namespace loopclass {

/// A Dynkin-Tits class: a commuting pair in Out(G) up to conjugacy, with a
/// structural label. kindIndex is the (i, j) exponent pattern.
struct DynkinTitsClass {
  LoopClass outHom;
  ClassKey::Kind kind;
  int i = 0, j = 0;
  std::string label() const;
};

/// One loop form over the Laurent ring in two variables: a Dynkin-Tits
/// class together with a coset representative in the outer-quotient of the
/// twisted degree-2 cohomology fiber.
struct LoopFormR2 {
  SimpleType type;
  DynkinTitsClass dt;
  FinAb fiber;
  FinAb::Elem rep;
  bool quasisplit;
};

std::vector<LoopFormR2> classify_r2(const SimpleType& type);

/// One isomorphism class of 2-loop algebras: a GL_2(Z)-orbit of loop forms.
struct LoopFormK {
  SimpleType type;
  ClassKey key;
  std::string dtLabel;
  FinAb fiber;
  FinAb::Elem rep;
  bool quasisplit;
  std::string name() const { return key.name(); }
};

std::vector<LoopFormK> classify_k(const SimpleType& type);

struct ClassRow {
  SimpleType type;
  std::string name, titsIndex, relative;
  bool quasisplit;
};

/// The classification table over the given types, joined with the index
/// and relative-type catalog.
std::vector<ClassRow> eala_table(const std::vector<SimpleType>& types);

/// Representative instantiation covering each catalog row family.
std::vector<SimpleType> eala_default_types();

}  // namespace loopclass
