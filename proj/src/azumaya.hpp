#pragma once

#include "int_matrix.hpp"

#include <tuple>

#include <string>
#include <vector>

namespace loopclass {

/// Element of Q/Z as a reduced fraction num/den with 0 <= num < den.
/// Encodes a root of unity exp(2*pi*i*num/den) exactly.
struct Phase {
  long long num = 0;
  long long den = 1;

  Phase() = default;
  Phase(long long n, long long d);
  static Phase zero() { return Phase(); }

  Phase operator+(const Phase& o) const;
  Phase operator-() const;
  Phase operator-(const Phase& o) const { return *this + (-o); }
  Phase times(long long k) const;
  bool operator==(const Phase&) const = default;
  bool isZero() const { return num == 0; }
  long long order() const { return den; }
  std::string toString() const;
};

/// Monomial matrix: a permutation with a root-of-unity phase per column;
/// entry (perm[j], j) equals the phase of column j. Closed under products
/// and inverses.
class MonomialMatrix {
 public:
  MonomialMatrix(std::vector<int> perm, std::vector<Phase> phases);
  static MonomialMatrix identity(int d);

  int size() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<Phase>& phases() const { return phases_; }

  MonomialMatrix operator*(const MonomialMatrix& o) const;
  MonomialMatrix inverse() const;
  MonomialMatrix scaled(const Phase& c) const;
  bool operator==(const MonomialMatrix&) const = default;

  /// True iff the two matrices differ by a global scalar phase.
  bool projectivelyEqual(const MonomialMatrix& o) const;
  /// Kronecker product (block structure of tensor factors).
  static MonomialMatrix kronecker(const MonomialMatrix& a,
                                  const MonomialMatrix& b);

 private:
  std::vector<int> perm_;
  std::vector<Phase> phases_;
};

/// The scalar c with y*x = c * x*y; throws if the commutator is not scalar.
Phase commutator_phase(const MonomialMatrix& x, const MonomialMatrix& y);

/// Finite abelian subgroup datum of the projective linear group: a divisor
/// chain (s_1 | ... | s_l), the group (Z/s_1)^2 x ... x (Z/s_l)^2 on the
/// basis a_1, b_1, ..., a_l, b_l, and the alternating commutator pairing
/// with <a_j, b_j> = 1/s_j and orthogonal blocks.
class MumfordDatum {
 public:
  explicit MumfordDatum(std::vector<long long> chain);

  const std::vector<long long>& chain() const { return chain_; }
  std::size_t blocks() const { return chain_.size(); }
  std::size_t rank() const { return 2 * chain_.size(); }
  long long order() const;
  long long exponent() const { return chain_.back(); }
  /// Moduli of the coordinates (s_1, s_1, s_2, s_2, ...).
  std::vector<long long> moduli() const;

  using Elem = std::vector<long long>;
  Elem reduce(Elem x) const;
  /// <x, y> in Q/Z.
  Phase pairing(const Elem& x, const Elem& y) const;
  bool tupleGenerates(const std::vector<Elem>& tuple) const;

 private:
  std::vector<long long> chain_;
};

/// Standard generator pairs (a_j, b_j) embedded in degree d: a_j the block
/// cyclic shift, b_j the diagonal root-of-unity matrix, tensored together
/// and padded with an identity factor of size d / prod(s_j).
std::vector<std::pair<MonomialMatrix, MonomialMatrix>> mumford_generators(
    const MumfordDatum& datum, long long d);

/// True iff the subgroup is irreducible in degree d: prod(s_j) = d.
bool is_irreducible(const MumfordDatum& datum, long long d);

/// Normal form of an anisotropic loop class of the projective linear group:
/// the divisor chain plus the unit r_1 mod s_1 (sign-normalized), with
/// r_1 = 1 whenever the nullity exceeds twice the block count.
struct BrusselForm {
  int nullity = 0;
  std::vector<long long> chain;
  long long r1 = 1;

  bool operator==(const BrusselForm&) const = default;
  bool operator<(const BrusselForm& o) const {
    return std::tie(nullity, chain, r1) < std::tie(o.nullity, o.chain, o.r1);
  }
  std::string name() const;
};

/// Computes the normal form of a generating tuple. Throws
/// std::invalid_argument if the tuple does not generate the full group
/// (the reducible case, which splits off a matrix factor first).
BrusselForm brussel_normal_form(const MumfordDatum& datum,
                                const std::vector<MumfordDatum::Elem>& tuple);

/// One tensor block of the cyclic presentation
/// X^q = t_i, Y^q = t_j^p, YX = zeta_q XY.
struct CyclicBlock {
  int varX = 0, varY = 0;  // 1-based Laurent variable indices
  long long q = 1;
  long long twist = 1;  // the exponent p
  std::string toString() const;
};

std::vector<CyclicBlock> cyclic_presentation(const BrusselForm& form);

/// Splits a normal form into its prime-power tensor factors.
std::vector<std::pair<long long, BrusselForm>> primary_decomposition(
    const BrusselForm& form);

/// Degree-2, nullity-2 consistency oracle: builds the simultaneous
/// eigenspace decomposition of the 2x2 matrix algebra under conjugation by
/// the lifted pair and verifies the quaternion relations X^2 = t1,
/// Y^2 = t2, YX = -XY on the distinguished generators.
bool multiloop_oracle_d2(const MumfordDatum& datum,
                         const std::vector<MumfordDatum::Elem>& tuple);

struct RealLoopAlgebraClass {
  std::string brauerLabel;      // e.g. "(-1,-1)+chi"
  std::string quaternionLabel;  // populated for degree 2 only
};

/// Classification of degree-d loop classes over the real one-variable
/// Laurent ring: one class for odd d, four for even d.
std::vector<RealLoopAlgebraClass> real_nullity1_table(long long d);

}  // namespace loopclass
