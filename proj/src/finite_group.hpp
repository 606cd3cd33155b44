#pragma once

#include "int_matrix.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace loopclass {

/// Finite group backed by an explicit multiplication table. Elements are
/// indices 0..size-1 with 0 the identity. Group axioms are checked on
/// construction.
class FiniteGroup {
 public:
  static std::shared_ptr<const FiniteGroup> trivial();
  static std::shared_ptr<const FiniteGroup> cyclic(std::size_t m);
  static std::shared_ptr<const FiniteGroup> symmetric(std::size_t k);
  static std::shared_ptr<const FiniteGroup> dihedral(std::size_t k);
  static std::shared_ptr<const FiniteGroup> product(
      const std::shared_ptr<const FiniteGroup>& a,
      const std::shared_ptr<const FiniteGroup>& b);
  static std::shared_ptr<const FiniteGroup> fromTable(
      std::vector<std::vector<int>> table, std::vector<std::string> names);

  std::size_t size() const { return n_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int power(int a, long long e) const;
  long long elementOrder(int a) const;
  std::vector<int> centralizer(int a) const;
  const std::string& name(int a) const { return names_[a]; }

 private:
  FiniteGroup(std::vector<int> table, std::vector<std::string> names);
  void validate() const;

  std::size_t n_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
};

using GroupRef = std::shared_ptr<const FiniteGroup>;

/// Geometric loop cocycle: an n-tuple of pairwise commuting elements of
/// a finite group, considered up to simultaneous conjugacy.
struct LoopClass {
  GroupRef target;
  std::vector<int> tuple;

  LoopClass(GroupRef g, std::vector<int> t);
  std::size_t n() const { return tuple.size(); }
};

/// True iff some group element conjugates c1 onto c2 componentwise.
bool are_conjugate(const LoopClass& c1, const LoopClass& c2);

/// Lexicographically minimal conjugate of the tuple (the canonical class
/// representative used for hashing).
std::vector<int> canonical_tuple(const GroupRef& g,
                                 const std::vector<int>& tuple);

/// One representative per conjugacy class of commuting n-tuples, sorted by
/// canonical tuple.
std::vector<LoopClass> classify_commuting_tuples(const GroupRef& g,
                                                 std::size_t n);

/// Pullback of a commuting tuple along g in GL_n(Z): entry i of the result
/// is prod_j tuple[j]^g(i,j).
std::vector<int> apply_base_change(const GroupRef& grp,
                                   const std::vector<int>& tuple,
                                   const IntMatrix& g);

/// Orbits of the combined (conjugacy x GL_n(Z)) equivalence on a list of
/// classes that is closed under the action. Each orbit is a sorted list of
/// indices into `classes`; orbits are sorted by smallest member.
std::vector<std::vector<std::size_t>> glnz_orbits(
    const std::vector<LoopClass>& classes, std::size_t n);

}  // namespace loopclass
