#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace loopclass {

/// Diagonal quadratic form over the Laurent ring in n variables with
/// quadratically closed coefficients: every entry is a monomial t_I for a
/// subset I of {1..n} (empty set = 1), stored as a bitmask. Units are all
/// squares, so the subsets are the only data.
struct LaurentDiagonalForm {
  int nvars = 0;
  std::vector<std::uint32_t> entries;  // multiset of bitmasks

  LaurentDiagonalForm(int n, std::vector<std::uint32_t> e);
  int dimension() const { return static_cast<int>(entries.size()); }
};

/// Witt decomposition: a duplicate-free set of monomials (the anisotropic
/// kernel) plus the hyperbolic rank.
struct WittClass {
  int nvars = 0;
  std::vector<std::uint32_t> anisotropic;  // sorted, duplicate-free
  int hyperbolicRank = 0;

  int dimension() const {
    return static_cast<int>(anisotropic.size()) + 2 * hyperbolicRank;
  }
  bool operator==(const WittClass&) const = default;
  bool operator<(const WittClass& o) const {
    return std::tie(anisotropic, hyperbolicRank) <
           std::tie(o.anisotropic, o.hyperbolicRank);
  }
};

/// Iterated residue decomposition: duplicate monomial entries cancel into
/// hyperbolic planes (as -1 is a square), the distinct remainder is
/// anisotropic over the iterated Laurent series field.
WittClass springer_normal_form(const LaurentDiagonalForm& q);

bool is_isometric(const LaurentDiagonalForm& a, const LaurentDiagonalForm& b);

/// All isometry classes of regular rank-d forms in n variables.
std::vector<WittClass> classify_od(int d, int n);

struct OdCount {
  long long computed = 0;
  /// Size of the even/odd subset family over {1..n} used by the classical
  /// parametrization; differs from the computed count (see discrepancy).
  long long subsetParametrization = 0;
  bool discrepancy = false;
};

OdCount classify_od_counts(int d, int n);

std::string monomialName(std::uint32_t mask);
std::string wittClassName(const WittClass& w);

}  // namespace loopclass
