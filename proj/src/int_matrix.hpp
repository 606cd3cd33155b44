#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace loopclass {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix over Z with arbitrary-precision entries.
///
/// All classification data in this library is exact; there is no floating
/// point anywhere. Matrices are small (desk scale), so the representation
/// is a plain row-major vector.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<BigInt>& d);
  static IntMatrix fromRows(
      std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  IntMatrix transposed() const;
  /// Horizontal concatenation [this | rhs].
  IntMatrix augmented(const IntMatrix& rhs) const;
  /// Copy of columns [first, first+count).
  IntMatrix columns(std::size_t first, std::size_t count) const;
  /// Copy of rows [first, first+count).
  IntMatrix topRows(std::size_t count) const;

  bool isZero() const;
  std::string toString() const;

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> a_;
};

/// Result of the Smith reduction: d = u * m * v with u, v unimodular.
/// uinv and vinv are the exact inverses, maintained during the reduction.
struct SmithResult {
  IntMatrix u, uinv, d, v, vinv;

  /// Diagonal entries of d that are nonzero, in ascending divisibility order.
  std::vector<BigInt> divisors() const;
  std::size_t rank() const { return divisors().size(); }
};

/// Smith normal form. The diagonal of the returned d is nonnegative and
/// each entry divides the next; d = u * m * v exactly.
SmithResult smith_normal_form(const IntMatrix& m);

/// Exact determinant (Bareiss elimination).
BigInt determinant(const IntMatrix& m);

/// Columns form a basis of the integer kernel lattice { x : m x = 0 }.
IntMatrix kernel_basis(const IntMatrix& m);

/// Columns form a basis of the lattice spanned by the columns of g.
IntMatrix column_lattice_basis(const IntMatrix& g);

/// Solves b * x = s exactly over Z for square invertible-over-Q b.
/// Throws internal_error if no integral solution exists.
IntMatrix solve_exact(const IntMatrix& b, const IntMatrix& s);

/// Exact inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Generating set of GL_n(Z): permutations, one sign flip, one transvection.
/// For n == 2 this is the classical four-element set.
std::vector<IntMatrix> glnz_generators(std::size_t n);

/// Elementary divisors of an alternating form given mod m: the unique chain
/// s_1 | s_2 | ... | s_l (each s_j >= 2, one entry per hyperbolic pair) such
/// that the form b/m on (Z/m)^n is equivalent to the orthogonal sum of
/// hyperbolic planes of orders s_1, ..., s_l.
///
/// Requires b skew-symmetric mod m with zero diagonal mod m.
std::vector<long long> alternating_divisors(const IntMatrix& b, long long m);

/// Raised when a computation violates an internal invariant.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

long long to_int64(const BigInt& v);

}  // namespace loopclass
