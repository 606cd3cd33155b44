#pragma once

#include "int_matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace loopclass {

/// Finite abelian group in canonical elementary-divisor form.
///
/// The divisor chain (d_1, ..., d_k) satisfies 2 <= d_1 | d_2 | ... | d_k;
/// the trivial group has an empty chain. Elements are coordinate vectors,
/// coordinate i reduced mod d_i. One canonical form per isomorphism class,
/// so groups compare by ==.
class FinAb {
 public:
  FinAb() = default;

  static FinAb trivial() { return FinAb(); }
  static FinAb cyclic(long long m);
  /// Canonicalizes an arbitrary list of moduli (each >= 1).
  static FinAb fromModuli(const std::vector<long long>& moduli);
  /// Z^rank modulo the column lattice of relations. Must be finite.
  static FinAb fromRelations(std::size_t rank, const IntMatrix& relations);

  const std::vector<long long>& divisors() const { return div_; }
  std::size_t rank() const { return div_.size(); }
  long long order() const;
  bool isTrivial() const { return div_.empty(); }
  bool operator==(const FinAb&) const = default;

  using Elem = std::vector<long long>;

  Elem zero() const { return Elem(div_.size(), 0); }
  Elem reduce(const Elem& x) const;
  /// Membership contract: reduced coordinates of the right length.
  void checkMember(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem smul(long long s, const Elem& a) const;
  bool isZeroElem(const Elem& a) const;
  /// All elements, lexicographic order. Intended for small groups only.
  std::vector<Elem> elements() const;

  std::string toString() const;

 private:
  std::vector<long long> div_;
};

/// Homomorphism between finite abelian groups, stored as an integer matrix
/// acting on coordinates (column j = image of the j-th generator). Checked
/// for well-definedness on construction; cross-group arithmetic anywhere in
/// the element calculus is rejected at operation entry.
class FinAbHom {
 public:
  FinAbHom(FinAb domain, FinAb codomain, IntMatrix matrix);

  static FinAbHom identity(const FinAb& g);
  static FinAbHom zero(const FinAb& domain, const FinAb& codomain);
  static FinAbHom scalar(const FinAb& g, long long s);

  const FinAb& domain() const { return dom_; }
  const FinAb& codomain() const { return cod_; }
  const IntMatrix& matrix() const { return mat_; }

  FinAb::Elem apply(const FinAb::Elem& x) const;
  /// this o g (g first).
  FinAbHom compose(const FinAbHom& g) const;
  bool operator==(const FinAbHom&) const = default;

  bool isAutomorphism() const;
  FinAbHom inverse() const;
  bool commutesWith(const FinAbHom& other) const;

 private:
  FinAb dom_, cod_;
  IntMatrix mat_;  // reduced mod codomain divisors
};

struct HomDecomposition {
  FinAb kernel, image, cokernel;
};

/// Kernel, image and cokernel of f, all in canonical divisor form.
HomDecomposition hom_kernel_image_cokernel(const FinAbHom& f);

/// Subquotient N/D of full-rank lattices D <= N <= Z^r presented by
/// generator matrices, together with a deterministic section: canonical
/// group, ambient representatives of its generators, and the projection
/// map back onto coordinates.
class LatticeSubquotient {
 public:
  /// numer/denom: r x * generator matrices; denom columns must lie in the
  /// lattice of numer columns, and both lattices must have full rank r.
  LatticeSubquotient(const IntMatrix& numer, const IntMatrix& denom);

  const FinAb& group() const { return group_; }
  /// r x group.rank(): column j is an ambient representative of gen j.
  const IntMatrix& representatives() const { return reps_; }
  /// Coordinates in group() of an ambient vector (must lie in the numerator
  /// lattice).
  FinAb::Elem project(const std::vector<BigInt>& ambient) const;
  FinAb::Elem projectColumn(const IntMatrix& m, std::size_t col) const;

 private:
  FinAb group_;
  IntMatrix reps_;
  IntMatrix basis_;                  // r x r basis of the numerator lattice
  IntMatrix u_;                      // Smith transform of denom coords
  std::vector<BigInt> fullDivisors_; // aligned with u_ rows (may contain 1s)
  std::vector<std::size_t> kept_;    // indices with divisor > 1
};

}  // namespace loopclass
