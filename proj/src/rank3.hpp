#pragma once

#include <string>
#include <vector>

namespace loopclass {

/// A conjugacy class of rank-zero abelian subgroups (Z/d)^3 of one of the
/// exceptional groups F4, simply connected E7, or E8, together with the
/// image SL_3(Z/d) of its normalizer.
struct RankZeroDatum {
  std::string groupType;  // "F4", "E7", "E8"
  long long d = 0;

  std::string weylImageName() const {
    return "SL3(Z/" + std::to_string(d) + ")";
  }
  bool operator==(const RankZeroDatum&) const = default;
};

/// Anisotropic class over the rank-3 Laurent ring: the datum plus the unit
/// exponent i of the standard generator triple (t1, t2, t3^i).
struct Rank3Class {
  RankZeroDatum datum;
  long long unit = 1;

  std::string label() const;
};

const std::vector<RankZeroDatum>& rank_zero_data(const std::string& type);

/// All anisotropic classes: one per unit of Z/d for every legal datum.
std::vector<Rank3Class> classify_rank3(const std::string& type);

struct Rank3Orbit {
  RankZeroDatum datum;
  std::vector<long long> units;  // sorted orbit of unit exponents
  std::string representativeLabel() const;
};

/// Base-change orbits: units modulo +-1, computed both by the determinant
/// formula and by closure over generator images (they must agree).
std::vector<Rank3Orbit> glnz_quotient_rank3(const std::string& type);

/// The computed E8 quotient has three orbits; flagged in emitted output
/// because the source classification lists two.
bool rank3_quotient_has_discrepancy(const std::string& type);

}  // namespace loopclass
