#include "azumaya.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace loopclass {

namespace {
long long modReduce(long long v, long long m) {
  long long x = v % m;
  return x < 0 ? x + m : x;
}

long long modInverse(long long a, long long m) {
  long long r0 = modReduce(a, m), r1 = m, x0 = 1, x1 = 0;
  while (r1 != 0) {
    long long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  if (r0 != 1) throw std::invalid_argument("not invertible modulo m");
  return modReduce(x0, m);
}
}  // namespace

Phase::Phase(long long n, long long d) {
  if (d <= 0) throw std::invalid_argument("phase denominator must be positive");
  n = modReduce(n, d);
  long long g = std::gcd(n, d);
  if (n == 0) {
    num = 0;
    den = 1;
  } else {
    num = n / g;
    den = d / g;
  }
}

Phase Phase::operator+(const Phase& o) const {
  long long d = std::lcm(den, o.den);
  return Phase(num * (d / den) + o.num * (d / o.den), d);
}

Phase Phase::operator-() const { return Phase(-num, den); }

Phase Phase::times(long long k) const { return Phase(num * modReduce(k, den), den); }

std::string Phase::toString() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

MonomialMatrix::MonomialMatrix(std::vector<int> perm, std::vector<Phase> phases)
    : perm_(std::move(perm)), phases_(std::move(phases)) {
  if (perm_.size() != phases_.size())
    throw std::invalid_argument("monomial matrix shape mismatch");
  std::vector<bool> hit(perm_.size(), false);
  for (int p : perm_) {
    if (p < 0 || p >= static_cast<int>(perm_.size()) || hit[p])
      throw std::invalid_argument("monomial matrix needs a permutation");
    hit[p] = true;
  }
}

MonomialMatrix MonomialMatrix::identity(int d) {
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  return MonomialMatrix(std::move(perm), std::vector<Phase>(d));
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const {
  if (size() != o.size()) throw std::invalid_argument("size mismatch");
  // (this * o) e_j = this (phase_o[j] e_{perm_o[j]})
  std::vector<int> perm(size());
  std::vector<Phase> ph(size());
  for (int j = 0; j < size(); ++j) {
    perm[j] = perm_[o.perm_[j]];
    ph[j] = o.phases_[j] + phases_[o.perm_[j]];
  }
  return MonomialMatrix(std::move(perm), std::move(ph));
}

MonomialMatrix MonomialMatrix::inverse() const {
  std::vector<int> perm(size());
  std::vector<Phase> ph(size());
  for (int j = 0; j < size(); ++j) {
    perm[perm_[j]] = j;
    ph[perm_[j]] = -phases_[j];
  }
  return MonomialMatrix(std::move(perm), std::move(ph));
}

MonomialMatrix MonomialMatrix::scaled(const Phase& c) const {
  std::vector<Phase> ph = phases_;
  for (auto& p : ph) p = p + c;
  return MonomialMatrix(perm_, std::move(ph));
}

bool MonomialMatrix::projectivelyEqual(const MonomialMatrix& o) const {
  if (size() != o.size() || perm_ != o.perm_) return false;
  Phase diff = o.phases_[0] - phases_[0];
  for (int j = 1; j < size(); ++j)
    if (!(o.phases_[j] - phases_[j] == diff)) return false;
  return true;
}

MonomialMatrix MonomialMatrix::kronecker(const MonomialMatrix& a,
                                         const MonomialMatrix& b) {
  int da = a.size(), db = b.size();
  std::vector<int> perm(da * db);
  std::vector<Phase> ph(da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      perm[i * db + j] = a.perm_[i] * db + b.perm_[j];
      ph[i * db + j] = a.phases_[i] + b.phases_[j];
    }
  return MonomialMatrix(std::move(perm), std::move(ph));
}

Phase commutator_phase(const MonomialMatrix& x, const MonomialMatrix& y) {
  MonomialMatrix yx = y * x;
  MonomialMatrix xy = x * y;
  if (!yx.projectivelyEqual(xy))
    throw std::invalid_argument("commutator is not scalar");
  return yx.phases()[0] - xy.phases()[0];
}

MumfordDatum::MumfordDatum(std::vector<long long> chain)
    : chain_(std::move(chain)) {
  if (chain_.empty()) throw std::invalid_argument("empty divisor chain");
  if (chain_.front() < 2)
    throw std::invalid_argument("chain entries must be at least 2");
  for (std::size_t i = 0; i + 1 < chain_.size(); ++i)
    if (chain_[i + 1] % chain_[i] != 0)
      throw std::invalid_argument("chain must be a divisibility chain");
}

long long MumfordDatum::order() const {
  long long o = 1;
  for (long long s : chain_) o *= s * s;
  return o;
}

std::vector<long long> MumfordDatum::moduli() const {
  std::vector<long long> out;
  for (long long s : chain_) {
    out.push_back(s);
    out.push_back(s);
  }
  return out;
}

MumfordDatum::Elem MumfordDatum::reduce(Elem x) const {
  auto mods = moduli();
  if (x.size() != mods.size())
    throw std::invalid_argument("element size mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = modReduce(x[i], mods[i]);
  return x;
}

Phase MumfordDatum::pairing(const Elem& x, const Elem& y) const {
  auto mods = moduli();
  if (x.size() != mods.size() || y.size() != mods.size())
    throw std::invalid_argument("element size mismatch");
  Phase acc;
  for (std::size_t j = 0; j < chain_.size(); ++j) {
    long long s = chain_[j];
    long long xa = modReduce(x[2 * j], s), xb = modReduce(x[2 * j + 1], s);
    long long ya = modReduce(y[2 * j], s), yb = modReduce(y[2 * j + 1], s);
    acc = acc + Phase(xa * yb - xb * ya, s);
  }
  return acc;
}

bool MumfordDatum::tupleGenerates(const std::vector<Elem>& tuple) const {
  auto mods = moduli();
  IntMatrix gens(rank(), tuple.size() + rank());
  for (std::size_t c = 0; c < tuple.size(); ++c) {
    if (tuple[c].size() != rank())
      throw std::invalid_argument("tuple element size mismatch");
    for (std::size_t r = 0; r < rank(); ++r) gens.at(r, c) = tuple[c][r];
  }
  for (std::size_t r = 0; r < rank(); ++r)
    gens.at(r, tuple.size() + r) = mods[r];
  auto div = smith_normal_form(gens).divisors();
  if (div.size() != rank()) return false;
  return std::all_of(div.begin(), div.end(),
                     [](const BigInt& v) { return v == 1; });
}

std::vector<std::pair<MonomialMatrix, MonomialMatrix>> mumford_generators(
    const MumfordDatum& datum, long long d) {
  long long prod = 1;
  for (long long s : datum.chain()) prod *= s;
  if (d < 1 || d % prod != 0)
    throw std::invalid_argument("chain does not divide the degree");

  // per-block shift and diagonal matrices
  std::vector<MonomialMatrix> blockA, blockB;
  for (long long s : datum.chain()) {
    std::vector<int> shift(s);
    for (long long i = 0; i < s; ++i)
      shift[i] = static_cast<int>((i + 1) % s);
    blockA.emplace_back(shift, std::vector<Phase>(s));
    std::vector<int> id(s);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Phase> diag;
    for (long long i = 0; i < s; ++i) diag.emplace_back(i, s);
    blockB.emplace_back(id, std::move(diag));
  }
  long long pad = d / prod;

  auto embed = [&](std::size_t block, bool useB) {
    MonomialMatrix acc = MonomialMatrix::identity(1);
    for (std::size_t j = 0; j < datum.blocks(); ++j) {
      const MonomialMatrix& factor =
          j == block ? (useB ? blockB[j] : blockA[j])
                     : MonomialMatrix::identity(
                           static_cast<int>(datum.chain()[j]));
      acc = MonomialMatrix::kronecker(acc, factor);
    }
    return MonomialMatrix::kronecker(acc,
                                     MonomialMatrix::identity(
                                         static_cast<int>(pad)));
  };

  std::vector<std::pair<MonomialMatrix, MonomialMatrix>> out;
  for (std::size_t j = 0; j < datum.blocks(); ++j) {
    auto a = embed(j, false);
    auto b = embed(j, true);
    // the defining relation b a = zeta_s a b, exactly
    if (!(commutator_phase(a, b) == Phase(1, datum.chain()[j])))
      throw internal_error("mumford generators violate the block relation");
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

bool is_irreducible(const MumfordDatum& datum, long long d) {
  long long prod = 1;
  for (long long s : datum.chain()) prod *= s;
  if (d < 1 || d % prod != 0)
    throw std::invalid_argument("chain does not divide the degree");
  return prod == d;
}

std::string BrusselForm::name() const {
  std::ostringstream os;
  os << "A(";
  for (std::size_t j = 0; j < chain.size(); ++j) {
    if (j) os << ",";
    os << (j == 0 ? r1 : 1) << "," << chain[j];
  }
  os << ")";
  return os.str();
}

BrusselForm brussel_normal_form(const MumfordDatum& datum,
                                const std::vector<MumfordDatum::Elem>& tuple) {
  if (!datum.tupleGenerates(tuple))
    throw std::invalid_argument(
        "tuple does not generate: reducible class, split off a matrix factor "
        "first");
  int n = static_cast<int>(tuple.size());
  long long m = datum.exponent();

  // pulled-back pairing matrix, scaled to Z/m
  IntMatrix b(tuple.size(), tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = 0; j < tuple.size(); ++j) {
      Phase p = datum.pairing(tuple[i], tuple[j]);
      if (m % p.order() != 0)
        throw internal_error("pairing value outside 1/m Z");
      b.at(i, j) = p.num * (m / p.den);
    }
  auto chain = alternating_divisors(b, m);
  if (chain != datum.chain())
    throw internal_error("pulled-back chain differs from the datum chain");

  BrusselForm form;
  form.nullity = n;
  form.chain = chain;
  long long s1 = chain.front();
  if (static_cast<std::size_t>(n) == 2 * chain.size()) {
    // top wedge of the tuple: determinant of the coordinate matrix, well
    // defined mod s_1 because s_1 divides every s_j
    IntMatrix coords(datum.rank(), tuple.size());
    for (std::size_t c = 0; c < tuple.size(); ++c)
      for (std::size_t r = 0; r < datum.rank(); ++r)
        coords.at(r, c) = tuple[c][r];
    long long delta = modReduce(to_int64(determinant(coords) % s1), s1);
    long long r1 = modInverse(delta, s1);
    form.r1 = std::min(r1, modReduce(s1 - r1, s1));
  } else {
    form.r1 = 1;
  }
  return form;
}

std::vector<CyclicBlock> cyclic_presentation(const BrusselForm& form) {
  std::vector<CyclicBlock> out;
  for (std::size_t j = 0; j < form.chain.size(); ++j) {
    CyclicBlock blk;
    blk.varX = static_cast<int>(2 * j + 1);
    blk.varY = static_cast<int>(2 * j + 2);
    blk.q = form.chain[j];
    blk.twist = j == 0 ? form.r1 : 1;
    out.push_back(blk);
  }
  return out;
}

std::string CyclicBlock::toString() const {
  std::ostringstream os;
  os << "(X^" << q << " = t" << varX << ", Y^" << q << " = t" << varY;
  if (twist != 1) os << "^" << twist;
  os << ", YX = zeta_" << q << " XY)";
  return os.str();
}

std::vector<std::pair<long long, BrusselForm>> primary_decomposition(
    const BrusselForm& form) {
  long long d = 1;
  for (long long s : form.chain) d *= s;
  std::vector<long long> primes;
  long long rest = d;
  for (long long p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) primes.push_back(rest);
  std::vector<std::pair<long long, BrusselForm>> out;
  for (long long p : primes) {
    BrusselForm part;
    part.nullity = form.nullity;
    for (long long s : form.chain) {
      long long sp = 1;
      while (s % p == 0) {
        sp *= p;
        s /= p;
      }
      if (sp > 1) part.chain.push_back(sp);
    }
    long long s1p = part.chain.front();
    long long r = modReduce(form.r1, s1p);
    part.r1 = std::min(r, modReduce(s1p - r, s1p));
    out.emplace_back(p, std::move(part));
  }
  return out;
}

bool multiloop_oracle_d2(const MumfordDatum& datum,
                         const std::vector<MumfordDatum::Elem>& tuple) {
  if (datum.chain() != std::vector<long long>{2})
    throw std::invalid_argument("oracle requires the degree-2 datum");
  if (tuple.size() != 2)
    throw std::invalid_argument("oracle requires a nullity-2 tuple");
  if (!datum.tupleGenerates(tuple))
    throw std::invalid_argument("tuple does not generate");

  auto gens = mumford_generators(datum, 2);
  const MonomialMatrix& a = gens[0].first;
  const MonomialMatrix& bmat = gens[0].second;
  auto lift = [&](const MumfordDatum::Elem& e) {
    MonomialMatrix acc = MonomialMatrix::identity(2);
    for (long long i = 0; i < modReduce(e[0], 2); ++i) acc = acc * a;
    for (long long i = 0; i < modReduce(e[1], 2); ++i) acc = acc * bmat;
    return acc;
  };
  MonomialMatrix lifts[2] = {lift(tuple[0]), lift(tuple[1])};

  // eigenbasis of the conjugation action: I, a, b, ab with characters
  std::vector<MonomialMatrix> basis = {MonomialMatrix::identity(2), a, bmat,
                                       a * bmat};
  auto character = [&](const MonomialMatrix& m, int i) {
    // conj_{lift_i}(m) = chi * m
    MonomialMatrix conj = lifts[i] * m * lifts[i].inverse();
    if (!conj.projectivelyEqual(m))
      throw internal_error("conjugation does not preserve the eigenbasis");
    return conj.phases()[0] - m.phases()[0];
  };

  // the generator X = gamma * m_X (x) t1^(1/2) needs character (1/2, 0);
  // Y needs (0, 1/2)
  auto findWithCharacter = [&](const Phase& c1, const Phase& c2) {
    for (const auto& m : basis)
      if (character(m, 0) == c1 && character(m, 1) == c2) return m;
    throw internal_error("no eigenvector with the required character");
  };
  MonomialMatrix mx = findWithCharacter(Phase(1, 2), Phase::zero());
  MonomialMatrix my = findWithCharacter(Phase::zero(), Phase(1, 2));

  // scale so the square is exactly the identity: X^2 = t1, Y^2 = t2
  auto normalizeSquare = [&](MonomialMatrix m) {
    MonomialMatrix sq = m * m;
    if (!sq.projectivelyEqual(MonomialMatrix::identity(2)))
      throw internal_error("eigenvector square is not scalar");
    Phase c = sq.phases()[0];  // m^2 = c * I
    // gamma with gamma^2 = -c: gamma = (den - num) / (2 den)
    Phase gamma((c.den - c.num), 2 * c.den);
    MonomialMatrix fixed = m.scaled(gamma);
    if (!(fixed * fixed == MonomialMatrix::identity(2)))
      throw internal_error("square normalization failed");
    return fixed;
  };
  MonomialMatrix x = normalizeSquare(mx);
  MonomialMatrix y = normalizeSquare(my);

  // the quaternion anticommutation relation YX = -XY, exactly
  MonomialMatrix yx = y * x;
  MonomialMatrix xy = x * y;
  if (!(yx == xy.scaled(Phase(1, 2))))
    throw internal_error("anticommutation relation failed");
  return true;
}

std::vector<RealLoopAlgebraClass> real_nullity1_table(long long d) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
  if (d % 2 == 1) return {RealLoopAlgebraClass{"0+0", ""}};
  std::vector<RealLoopAlgebraClass> out = {
      {"0+0", ""}, {"0+chi", ""}, {"(-1,-1)+0", ""}, {"(-1,-1)+chi", ""}};
  if (d == 2) {
    out[0].quaternionLabel = "(1,1)";
    out[1].quaternionLabel = "(1,t)";
    out[2].quaternionLabel = "(-1,-1)";
    out[3].quaternionLabel = "(-1,t)";
  }
  return out;
}

}  // namespace loopclass
