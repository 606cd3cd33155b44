#pragma once

#include "fin_ab.hpp"

#include <optional>
#include <vector>

namespace loopclass {

/// Finite abelian group with n pairwise-commuting automorphisms; the
/// coefficient object for continuous cohomology of the profinite group
/// Zhat^n acting through a finite quotient.
class ZnModule {
 public:
  ZnModule(FinAb group, std::vector<FinAbHom> sigmas);

  static ZnModule trivialAction(const FinAb& group, std::size_t n);

  const FinAb& group() const { return group_; }
  std::size_t n() const { return sigmas_.size(); }
  const FinAbHom& sigma(std::size_t i) const { return sigmas_[i]; }
  bool actionIsTrivial() const;

 private:
  FinAb group_;
  std::vector<FinAbHom> sigmas_;
};

/// H^i of the Koszul complex on the operators (sigma_j - 1), with chosen
/// coset representatives in the degree-i cochain space M^(n choose i).
class CohomologyGroup {
 public:
  std::size_t degree() const { return degree_; }
  const FinAb& group() const { return group_; }
  /// cochainRank x group.rank(); column j represents generator j.
  const IntMatrix& representatives() const { return reps_; }
  const std::vector<long long>& cochainModuli() const { return moduli_; }
  /// Class of a cocycle given by its cochain coordinates.
  FinAb::Elem projectCocycle(const std::vector<long long>& cocycle) const;
  /// Cochain coordinates of a representative of the given class.
  std::vector<long long> representativeOf(const FinAb::Elem& cls) const;

 private:
  friend CohomologyGroup koszul_cohomology(const ZnModule&, std::size_t);
  std::size_t degree_ = 0;
  FinAb group_;
  IntMatrix reps_;
  std::vector<long long> moduli_;
  std::optional<LatticeSubquotient> sq_;
};

/// Continuous cohomology H^i(Zhat^n, M) computed from the Koszul complex.
/// Degree 0 is the fixed-point subgroup, degree n the coinvariants.
CohomologyGroup koszul_cohomology(const ZnModule& m, std::size_t degree);

/// Matrix of the Koszul differential C^degree -> C^(degree+1), acting on
/// coordinates of the cochain spaces M^(n choose i).
IntMatrix koszul_differential(const ZnModule& m, std::size_t degree);

std::vector<long long> koszul_cochain_moduli(const ZnModule& m,
                                             std::size_t degree);

/// The map induced on H^i by an automorphism u of M commuting with the
/// whole action. Functorial in u.
FinAbHom equivariant_action_on_h(const ZnModule& m, std::size_t degree,
                                 const FinAbHom& u);

/// Base-change action of g in GL_2(Z) on H^2 for a trivial action module:
/// pullback along g multiplies top-degree classes by det(g).
FinAbHom glnz_action_on_h2(const ZnModule& m, const IntMatrix& g);

}  // namespace loopclass
