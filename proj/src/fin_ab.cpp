#include "fin_ab.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace loopclass {

namespace {
long long modReduce(long long v, long long m) {
  long long x = v % m;
  return x < 0 ? x + m : x;
}
}  // namespace

FinAb FinAb::cyclic(long long m) {
  if (m < 1) throw std::invalid_argument("cyclic: modulus must be >= 1");
  FinAb g;
  if (m > 1) g.div_ = {m};
  return g;
}

FinAb FinAb::fromModuli(const std::vector<long long>& moduli) {
  std::vector<BigInt> d;
  for (long long m : moduli) {
    if (m < 1) throw std::invalid_argument("fromModuli: modulus must be >= 1");
    d.emplace_back(m);
  }
  return fromRelations(moduli.size(), IntMatrix::diagonal(d));
}

FinAb FinAb::fromRelations(std::size_t rank, const IntMatrix& relations) {
  if (relations.rows() != rank)
    throw std::invalid_argument("fromRelations: relation rows != rank");
  SmithResult s = smith_normal_form(relations);
  FinAb g;
  std::size_t n = std::min(relations.rows(), relations.cols());
  for (std::size_t i = 0; i < rank; ++i) {
    BigInt di = i < n ? s.d.at(i, i) : BigInt(0);
    if (di == 0)
      throw std::invalid_argument("fromRelations: quotient is infinite");
    if (di > 1) g.div_.push_back(to_int64(di));
  }
  return g;
}

long long FinAb::order() const {
  long long o = 1;
  for (long long d : div_) o *= d;
  return o;
}

FinAb::Elem FinAb::reduce(const Elem& x) const {
  if (x.size() != div_.size())
    throw std::invalid_argument("element does not belong to this group");
  Elem out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = modReduce(x[i], div_[i]);
  return out;
}

// Elements are carried as reduced coordinate vectors against this group's
// divisor chain; an unreduced or wrongly sized vector at an operation
// entry means it belongs to some other group.
void FinAb::checkMember(const Elem& a) const {
  if (a.size() != div_.size())
    throw std::invalid_argument("cross-group arithmetic");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0 || a[i] >= div_[i])
      throw std::invalid_argument("cross-group arithmetic: unreduced element");
}

FinAb::Elem FinAb::add(const Elem& a, const Elem& b) const {
  checkMember(a);
  checkMember(b);
  Elem out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = modReduce(a[i] + b[i], div_[i]);
  return out;
}

FinAb::Elem FinAb::neg(const Elem& a) const {
  checkMember(a);
  Elem out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = modReduce(-a[i], div_[i]);
  return out;
}

FinAb::Elem FinAb::smul(long long s, const Elem& a) const {
  checkMember(a);
  Elem out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    long long si = modReduce(s, div_[i]);
    out[i] = modReduce(si * a[i], div_[i]);
  }
  return out;
}

bool FinAb::isZeroElem(const Elem& a) const {
  checkMember(a);
  return std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; });
}

std::vector<FinAb::Elem> FinAb::elements() const {
  std::vector<Elem> out;
  Elem cur = zero();
  out.push_back(cur);
  while (true) {
    std::size_t i = div_.size();
    while (i > 0) {
      --i;
      if (++cur[i] < div_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (div_.empty()) return out;
    out.push_back(cur);
  }
}

std::string FinAb::toString() const {
  if (div_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < div_.size(); ++i)
    os << (i ? " x " : "") << "Z/" << div_[i];
  return os.str();
}

FinAbHom::FinAbHom(FinAb domain, FinAb codomain, IntMatrix matrix)
    : dom_(std::move(domain)), cod_(std::move(codomain)), mat_(std::move(matrix)) {
  if (mat_.rows() != cod_.rank() || mat_.cols() != dom_.rank())
    throw std::invalid_argument("hom matrix shape mismatch");
  for (std::size_t i = 0; i < mat_.rows(); ++i)
    for (std::size_t j = 0; j < mat_.cols(); ++j) {
      BigInt v = mat_.at(i, j) % cod_.divisors()[i];
      if (v < 0) v += cod_.divisors()[i];
      mat_.at(i, j) = v;
    }
  // well-defined: d_j * (column j) must vanish in the codomain
  for (std::size_t j = 0; j < dom_.rank(); ++j)
    for (std::size_t i = 0; i < cod_.rank(); ++i)
      if (BigInt(dom_.divisors()[j]) * mat_.at(i, j) % cod_.divisors()[i] != 0)
        throw std::invalid_argument("hom is not well-defined");
}

FinAbHom FinAbHom::identity(const FinAb& g) {
  return FinAbHom(g, g, IntMatrix::identity(g.rank()));
}

FinAbHom FinAbHom::zero(const FinAb& domain, const FinAb& codomain) {
  return FinAbHom(domain, codomain,
                  IntMatrix(codomain.rank(), domain.rank()));
}

FinAbHom FinAbHom::scalar(const FinAb& g, long long s) {
  IntMatrix m(g.rank(), g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i)
    m.at(i, i) = modReduce(s, g.divisors()[i]);
  return FinAbHom(g, g, m);
}

FinAb::Elem FinAbHom::apply(const FinAb::Elem& x) const {
  dom_.checkMember(x);
  FinAb::Elem out(cod_.rank(), 0);
  for (std::size_t i = 0; i < cod_.rank(); ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < dom_.rank(); ++j) acc += mat_.at(i, j) * x[j];
    out[i] = to_int64(((acc % cod_.divisors()[i]) + cod_.divisors()[i]) %
                      cod_.divisors()[i]);
  }
  return out;
}

FinAbHom FinAbHom::compose(const FinAbHom& g) const {
  if (!(g.cod_ == dom_))
    throw std::invalid_argument("compose: domain/codomain mismatch");
  return FinAbHom(g.dom_, cod_, mat_ * g.mat_);
}

bool FinAbHom::isAutomorphism() const {
  if (!(dom_ == cod_)) return false;
  return hom_kernel_image_cokernel(*this).kernel.isTrivial();
}

FinAbHom FinAbHom::inverse() const {
  if (!isAutomorphism()) throw std::invalid_argument("inverse: not an automorphism");
  // finite order: sigma^(k) == id for some k, inverse = sigma^(k-1)
  FinAbHom id = identity(dom_);
  FinAbHom prev = id;
  FinAbHom cur = *this;
  for (long long guard = 0; guard < (1 << 24); ++guard) {
    if (cur == id) return prev;
    prev = cur;
    cur = compose(cur);
  }
  throw internal_error("inverse: order search did not terminate");
}

bool FinAbHom::commutesWith(const FinAbHom& other) const {
  return compose(other) == other.compose(*this);
}

LatticeSubquotient::LatticeSubquotient(const IntMatrix& numer,
                                       const IntMatrix& denom) {
  std::size_t r = numer.rows();
  if (denom.rows() != r)
    throw internal_error("subquotient: ambient rank mismatch");
  basis_ = column_lattice_basis(numer);
  if (basis_.cols() != r)
    throw internal_error("subquotient: numerator lattice not full rank");
  IntMatrix coords = solve_exact(basis_, denom);  // throws if denom not inside
  SmithResult s = smith_normal_form(coords);
  u_ = s.u;
  std::size_t n = std::min(coords.rows(), coords.cols());
  std::vector<long long> div;
  fullDivisors_.assign(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    BigInt di = i < n ? s.d.at(i, i) : BigInt(0);
    if (di == 0) throw internal_error("subquotient: quotient not finite");
    fullDivisors_[i] = di;
    if (di > 1) {
      kept_.push_back(i);
      div.push_back(to_int64(di));
    }
  }
  group_ = FinAb::fromModuli(div);
  if (group_.divisors() != div)
    throw internal_error("subquotient: Smith chain not canonical");
  // representative of generator i: basis * uinv * e_i
  IntMatrix gens = basis_ * s.uinv;
  reps_ = IntMatrix(r, kept_.size());
  for (std::size_t j = 0; j < kept_.size(); ++j)
    for (std::size_t i = 0; i < r; ++i) reps_.at(i, j) = gens.at(i, kept_[j]);
}

FinAb::Elem LatticeSubquotient::project(
    const std::vector<BigInt>& ambient) const {
  std::size_t r = basis_.rows();
  if (ambient.size() != r) throw internal_error("project: size mismatch");
  IntMatrix col(r, 1);
  for (std::size_t i = 0; i < r; ++i) col.at(i, 0) = ambient[i];
  IntMatrix x = solve_exact(basis_, col);
  IntMatrix y = u_ * x;
  FinAb::Elem out;
  out.reserve(kept_.size());
  for (std::size_t j : kept_) {
    BigInt v = y.at(j, 0) % fullDivisors_[j];
    if (v < 0) v += fullDivisors_[j];
    out.push_back(to_int64(v));
  }
  return out;
}

FinAb::Elem LatticeSubquotient::projectColumn(const IntMatrix& m,
                                              std::size_t col) const {
  std::vector<BigInt> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, col);
  return project(v);
}

HomDecomposition hom_kernel_image_cokernel(const FinAbHom& f) {
  const FinAb& dom = f.domain();
  const FinAb& cod = f.codomain();
  std::size_t k = dom.rank(), m = cod.rank();
  std::vector<BigInt> dmods(dom.divisors().begin(), dom.divisors().end());
  std::vector<BigInt> emods(cod.divisors().begin(), cod.divisors().end());
  IntMatrix relDom = IntMatrix::diagonal(dmods);
  IntMatrix relCod = IntMatrix::diagonal(emods);

  HomDecomposition out;

  // cokernel: Z^m / (A Z^k + relCod)
  if (m == 0) {
    out.cokernel = FinAb::trivial();
  } else {
    out.cokernel = FinAb::fromRelations(m, f.matrix().augmented(relCod));
  }

  // image: (A Z^k + relCod) / relCod
  if (m == 0) {
    out.image = FinAb::trivial();
  } else {
    LatticeSubquotient sq(f.matrix().augmented(relCod), relCod);
    out.image = sq.group();
  }

  // kernel: { x : A x in relCod } / relDom
  if (k == 0) {
    out.kernel = FinAb::trivial();
  } else {
    IntMatrix kerGens;
    if (m == 0) {
      kerGens = IntMatrix::identity(k);
    } else {
      IntMatrix kb = kernel_basis(f.matrix().augmented(relCod));
      kerGens = kb.topRows(k);
    }
    LatticeSubquotient sq(kerGens, relDom);
    out.kernel = sq.group();
  }

  long long lhs = out.kernel.order() * out.image.order();
  if (lhs != dom.order())
    throw internal_error("hom decomposition: |ker|*|im| != |dom|");
  if (out.image.order() * out.cokernel.order() != cod.order())
    throw internal_error("hom decomposition: |im|*|coker| != |cod|");
  return out;
}

}  // namespace loopclass
