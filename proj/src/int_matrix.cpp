#include "int_matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace loopclass {

long long to_int64(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw internal_error("integer out of 64-bit range");
  return static_cast<long long>(v);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::fromRows(
    std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
    std::size_t j = 0;
    for (long long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw internal_error("matrix shape mismatch in *");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

IntMatrix IntMatrix::augmented(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw internal_error("augment: row mismatch");
  IntMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j)
      out.at(i, cols_ + j) = rhs.at(i, j);
  }
  return out;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  IntMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out.at(i, j) = at(i, first + j);
  return out;
}

IntMatrix IntMatrix::topRows(std::size_t count) const {
  IntMatrix out(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  return out;
}

bool IntMatrix::isZero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const BigInt& v) { return v == 0; });
}

std::string IntMatrix::toString() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

std::vector<BigInt> SmithResult::divisors() const {
  std::vector<BigInt> out;
  std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (d.at(i, i) != 0) out.push_back(d.at(i, i));
  return out;
}

namespace {

struct SmithWorker {
  IntMatrix a, u, uinv, v, vinv;
  std::size_t r, c;

  explicit SmithWorker(const IntMatrix& m)
      : a(m),
        u(IntMatrix::identity(m.rows())),
        uinv(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())),
        vinv(IntMatrix::identity(m.cols())),
        r(m.rows()),
        c(m.cols()) {}

  // row i -= q * row j, with the matching updates keeping a = u*m*v and
  // u*uinv = I.
  void rowSub(std::size_t i, std::size_t j, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < c; ++k) a.at(i, k) -= q * a.at(j, k);
    for (std::size_t k = 0; k < r; ++k) u.at(i, k) -= q * u.at(j, k);
    for (std::size_t k = 0; k < r; ++k) uinv.at(k, j) += q * uinv.at(k, i);
  }
  void colSub(std::size_t j, std::size_t k, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < r; ++i) a.at(i, j) -= q * a.at(i, k);
    for (std::size_t i = 0; i < c; ++i) v.at(i, j) -= q * v.at(i, k);
    for (std::size_t i = 0; i < c; ++i) vinv.at(k, i) += q * vinv.at(j, i);
  }
  void rowSwap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < c; ++k) std::swap(a.at(i, k), a.at(j, k));
    for (std::size_t k = 0; k < r; ++k) std::swap(u.at(i, k), u.at(j, k));
    for (std::size_t k = 0; k < r; ++k) std::swap(uinv.at(k, i), uinv.at(k, j));
  }
  void colSwap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < r; ++k) std::swap(a.at(k, i), a.at(k, j));
    for (std::size_t k = 0; k < c; ++k) std::swap(v.at(k, i), v.at(k, j));
    for (std::size_t k = 0; k < c; ++k) std::swap(vinv.at(i, k), vinv.at(j, k));
  }
  void rowNeg(std::size_t i) {
    for (std::size_t k = 0; k < c; ++k) a.at(i, k) = -a.at(i, k);
    for (std::size_t k = 0; k < r; ++k) u.at(i, k) = -u.at(i, k);
    for (std::size_t k = 0; k < r; ++k) uinv.at(k, i) = -uinv.at(k, i);
  }

  bool findPivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (a.at(i, j) == 0) continue;
        BigInt mag = abs(a.at(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void reduceAt(std::size_t t) {
    for (;;) {
      std::size_t pi = t, pj = t;
      if (!findPivot(t, pi, pj)) return;
      rowSwap(t, pi);
      colSwap(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a.at(i, t) == 0) continue;
        BigInt q = a.at(i, t) / a.at(t, t);
        rowSub(i, t, q);
        if (a.at(i, t) != 0) clean = false;
      }
      if (!clean) continue;
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a.at(t, j) == 0) continue;
        BigInt q = a.at(t, j) / a.at(t, t);
        colSub(j, t, q);
        if (a.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the remaining block; otherwise mix a bad row in
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c && divides; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            rowSub(t, i, -1);
            divides = false;
          }
      if (divides) return;
    }
  }

  void run() {
    std::size_t n = std::min(r, c);
    for (std::size_t t = 0; t < n; ++t) {
      reduceAt(t);
      if (a.at(t, t) == 0) break;
      if (a.at(t, t) < 0) rowNeg(t);
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithWorker w(m);
  w.run();
  return SmithResult{w.u, w.uinv, w.a, w.v, w.vinv};
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw internal_error("determinant: not square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a.at(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithResult s = smith_normal_form(m);
  std::size_t n = std::min(m.rows(), m.cols());
  std::vector<std::size_t> zeroCols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (j >= n || s.d.at(j, j) == 0) zeroCols.push_back(j);
  IntMatrix out(m.cols(), zeroCols.size());
  for (std::size_t j = 0; j < zeroCols.size(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i)
      out.at(i, j) = s.v.at(i, zeroCols[j]);
  return out;
}

IntMatrix column_lattice_basis(const IntMatrix& g) {
  SmithResult s = smith_normal_form(g);
  std::size_t n = std::min(g.rows(), g.cols());
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j)
    if (s.d.at(j, j) != 0) keep.push_back(j);
  IntMatrix out(g.rows(), keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j)
    for (std::size_t i = 0; i < g.rows(); ++i)
      out.at(i, j) = s.uinv.at(i, keep[j]) * s.d.at(keep[j], keep[j]);
  return out;
}

IntMatrix solve_exact(const IntMatrix& b, const IntMatrix& s) {
  if (b.rows() != b.cols() || b.rows() != s.rows())
    throw internal_error("solve_exact: shape mismatch");
  std::size_t n = b.rows();
  BigInt db = determinant(b);
  if (db == 0) throw internal_error("solve_exact: singular system");
  IntMatrix x(n, s.cols());
  for (std::size_t j = 0; j < s.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      IntMatrix bi = b;
      for (std::size_t k = 0; k < n; ++k) bi.at(k, i) = s.at(k, j);
      BigInt num = determinant(bi);
      if (num % db != 0) throw internal_error("solve_exact: no integral solution");
      x.at(i, j) = num / db;
    }
  return x;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  BigInt d = determinant(m);
  if (d != 1 && d != -1)
    throw std::invalid_argument("unimodular_inverse: determinant is not +-1");
  IntMatrix inv = solve_exact(m, IntMatrix::identity(m.rows()));
  if (!(m * inv == IntMatrix::identity(m.rows())))
    throw internal_error("unimodular_inverse: verification failed");
  return inv;
}

std::vector<IntMatrix> glnz_generators(std::size_t n) {
  if (n == 0) throw std::invalid_argument("glnz_generators: n must be >= 1");
  if (n == 1) return {IntMatrix::fromRows({{-1}})};
  if (n == 2)
    return {IntMatrix::fromRows({{-1, 0}, {0, -1}}),
            IntMatrix::fromRows({{1, 0}, {0, -1}}),
            IntMatrix::fromRows({{1, 1}, {0, 1}}),
            IntMatrix::fromRows({{0, 1}, {1, 0}})};
  std::vector<IntMatrix> out;
  IntMatrix cyc(n, n);  // e_i -> e_{i+1}
  for (std::size_t i = 0; i < n; ++i) cyc.at((i + 1) % n, i) = 1;
  out.push_back(cyc);
  IntMatrix swp = IntMatrix::identity(n);
  swp.at(0, 0) = swp.at(1, 1) = 0;
  swp.at(0, 1) = swp.at(1, 0) = 1;
  out.push_back(swp);
  IntMatrix flip = IntMatrix::identity(n);
  flip.at(0, 0) = -1;
  out.push_back(flip);
  IntMatrix trans = IntMatrix::identity(n);
  trans.at(0, 1) = 1;
  out.push_back(trans);
  return out;
}

namespace {

long long modReduce(long long v, long long m) {
  long long x = v % m;
  return x < 0 ? x + m : x;
}

// One p-primary splitting step: hyperbolic-pair reduction of an alternating
// form on (Z/p^e)^n with values b(i,j)/p^e.
std::vector<long long> primaryChain(std::vector<std::vector<long long>> b,
                                    long long pe) {
  std::size_t n = b.size();
  std::vector<long long> chain;  // descending orders
  std::vector<std::size_t> live(n);
  std::iota(live.begin(), live.end(), 0);
  while (true) {
    // value of largest order = smallest gcd with p^e
    long long bestGcd = 0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t x = 0; x < live.size(); ++x)
      for (std::size_t y = x + 1; y < live.size(); ++y) {
        long long val = modReduce(b[live[x]][live[y]], pe);
        if (val == 0) continue;
        long long g = std::gcd(val, pe);
        if (bestGcd == 0 || g < bestGcd) {
          bestGcd = g;
          bi = x;
          bj = y;
        }
      }
    if (bestGcd == 0) break;
    long long order = pe / bestGcd;  // the block order p^s
    chain.push_back(order);
    std::size_t I = live[bi], J = live[bj];
    // c is a unit mod order: b[I][J]/pe = c/order
    long long c = modReduce(b[I][J], pe) / bestGcd;
    long long cinv = 1;
    {
      // extended gcd inverse of c mod order
      long long a0 = c % order, m0 = order, x0 = 1, x1 = 0;
      long long aa = a0, mm = m0;
      while (mm != 0) {
        long long q = aa / mm;
        aa -= q * mm;
        std::swap(aa, mm);
        x0 -= q * x1;
        std::swap(x0, x1);
      }
      if (aa != 1) throw internal_error("alternating_divisors: non-unit pivot");
      cinv = modReduce(x0, order);
    }
    // split every remaining generator off the hyperbolic pair (I, J)
    std::vector<std::size_t> rest;
    for (std::size_t x = 0; x < live.size(); ++x)
      if (x != bi && x != bj) rest.push_back(live[x]);
    for (std::size_t z : rest) {
      // <I,z> = alpha/order, <J,z> = beta/order  (orders divide the max)
      long long scale = bestGcd;  // pe/order
      if (modReduce(b[I][z], pe) % scale != 0 ||
          modReduce(b[J][z], pe) % scale != 0)
        throw internal_error("alternating_divisors: order maximality violated");
      long long alpha = modReduce(b[I][z], pe) / scale;
      long long beta = modReduce(b[J][z], pe) / scale;
      long long ca = modReduce(alpha * cinv, order);
      long long cb = modReduce(beta * cinv, order);
      // z' = z - ca * J + cb * I ; update the form row/column of z
      for (std::size_t w = 0; w < n; ++w) {
        long long nv = b[w][z] - ca * b[w][J] + cb * b[w][I];
        b[w][z] = modReduce(nv, pe);
      }
      for (std::size_t w = 0; w < n; ++w) {
        long long nv = b[z][w] - ca * b[J][w] + cb * b[I][w];
        b[z][w] = modReduce(nv, pe);
      }
    }
    live = rest;
  }
  return chain;
}

}  // namespace

std::vector<long long> alternating_divisors(const IntMatrix& b, long long m) {
  if (m < 1) throw std::invalid_argument("alternating_divisors: modulus < 1");
  if (b.rows() != b.cols())
    throw std::invalid_argument("alternating_divisors: not square");
  std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (b.at(i, i) % m != 0)
      throw std::invalid_argument("alternating_divisors: nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j)
      if ((b.at(i, j) + b.at(j, i)) % m != 0)
        throw std::invalid_argument("alternating_divisors: not skew-symmetric");
  }
  // p-primary decomposition of the modulus
  std::vector<std::pair<long long, long long>> pparts;  // (p, p^e)
  long long rest = m;
  for (long long p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      long long pe = 1;
      while (rest % p == 0) {
        rest /= p;
        pe *= p;
      }
      pparts.emplace_back(p, pe);
    }
  if (rest > 1) pparts.emplace_back(rest, rest);

  // chains per prime, each descending; merge aligned from the largest block
  std::vector<std::vector<long long>> chains;
  std::size_t maxLen = 0;
  for (auto [p, pe] : pparts) {
    long long cof = m / pe;
    // value of the p-component: (m/pe) * b mod pe
    std::vector<std::vector<long long>> bp(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigInt scaled = (b.at(i, j) % m) * cof % pe;
        bp[i][j] = modReduce(to_int64(scaled), pe);
      }
    auto ch = primaryChain(std::move(bp), pe);
    maxLen = std::max(maxLen, ch.size());
    chains.push_back(std::move(ch));
  }
  std::vector<long long> merged(maxLen, 1);
  for (const auto& ch : chains)
    for (std::size_t i = 0; i < ch.size(); ++i) merged[i] *= ch[i];
  // merged is descending; emit ascending chain s_1 | ... | s_l
  std::reverse(merged.begin(), merged.end());
  return merged;
}

}  // namespace loopclass
