#include "koszul.hpp"

#include <algorithm>
#include <stdexcept>

namespace loopclass {

namespace {

/// Sorted i-element subsets of {0..n-1}, ordered by bitmask value.
std::vector<unsigned> subsetsOfSize(std::size_t n, std::size_t i) {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (static_cast<std::size_t>(__builtin_popcount(mask)) == i)
      out.push_back(mask);
  return out;
}

int koszulSign(unsigned subset, unsigned j) {
  // (-1)^{ # elements of subset below j }
  unsigned below = subset & ((1u << j) - 1);
  return __builtin_popcount(below) % 2 == 0 ? 1 : -1;
}

}  // namespace

ZnModule::ZnModule(FinAb group, std::vector<FinAbHom> sigmas)
    : group_(std::move(group)), sigmas_(std::move(sigmas)) {
  for (const auto& s : sigmas_) {
    if (!(s.domain() == group_) || !(s.codomain() == group_))
      throw std::invalid_argument("sigma does not act on the module group");
    if (!s.isAutomorphism())
      throw std::invalid_argument("sigma is not invertible");
  }
  for (std::size_t i = 0; i < sigmas_.size(); ++i)
    for (std::size_t j = i + 1; j < sigmas_.size(); ++j)
      if (!sigmas_[i].commutesWith(sigmas_[j]))
        throw std::invalid_argument("module operators do not commute");
}

ZnModule ZnModule::trivialAction(const FinAb& group, std::size_t n) {
  std::vector<FinAbHom> sig(n, FinAbHom::identity(group));
  return ZnModule(group, std::move(sig));
}

bool ZnModule::actionIsTrivial() const {
  FinAbHom id = FinAbHom::identity(group_);
  return std::all_of(sigmas_.begin(), sigmas_.end(),
                     [&](const FinAbHom& s) { return s == id; });
}

FinAb::Elem CohomologyGroup::projectCocycle(
    const std::vector<long long>& cocycle) const {
  if (!sq_) {
    if (!group_.isTrivial()) throw internal_error("missing projection data");
    return {};
  }
  std::vector<BigInt> v(cocycle.begin(), cocycle.end());
  return sq_->project(v);
}

std::vector<long long> CohomologyGroup::representativeOf(
    const FinAb::Elem& cls) const {
  if (cls.size() != group_.rank())
    throw std::invalid_argument("class does not belong to this cohomology group");
  std::vector<long long> out(moduli_.size(), 0);
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < cls.size(); ++j) acc += reps_.at(i, j) * cls[j];
    BigInt v = acc % moduli_[i];
    if (v < 0) v += moduli_[i];
    out[i] = to_int64(v);
  }
  return out;
}

/// Matrix of the Koszul differential C^i -> C^(i+1).
IntMatrix koszul_differential(const ZnModule& m, std::size_t i) {
  std::size_t n = m.n();
  std::size_t r = m.group().rank();
  auto rowsSets = subsetsOfSize(n, i + 1);
  auto colsSets = subsetsOfSize(n, i);
  IntMatrix d(rowsSets.size() * r, colsSets.size() * r);
  for (std::size_t cs = 0; cs < colsSets.size(); ++cs) {
    unsigned s = colsSets[cs];
    for (unsigned j = 0; j < n; ++j) {
      if (s & (1u << j)) continue;
      unsigned t = s | (1u << j);
      std::size_t rs =
          std::lower_bound(rowsSets.begin(), rowsSets.end(), t) -
          rowsSets.begin();
      int sign = koszulSign(s, j);
      const IntMatrix& sig = m.sigma(j).matrix();
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
          BigInt v = sig.at(a, b) - (a == b ? 1 : 0);
          d.at(rs * r + a, cs * r + b) = sign > 0 ? v : -v;
        }
    }
  }
  return d;
}

std::vector<long long> koszul_cochain_moduli(const ZnModule& m, std::size_t i) {
  std::size_t count = subsetsOfSize(m.n(), i).size();
  std::vector<long long> out;
  out.reserve(count * m.group().rank());
  for (std::size_t k = 0; k < count; ++k)
    for (long long d : m.group().divisors()) out.push_back(d);
  return out;
}

CohomologyGroup koszul_cohomology(const ZnModule& m, std::size_t degree) {
  if (degree > m.n())
    throw std::invalid_argument("cohomology degree out of range");
  CohomologyGroup h;
  h.degree_ = degree;
  auto mods = koszul_cochain_moduli(m, degree);
  h.moduli_ = mods;
  std::size_t r = mods.size();
  if (r == 0) {  // trivial module
    h.group_ = FinAb::trivial();
    h.reps_ = IntMatrix(0, 0);
    return h;
  }
  std::vector<BigInt> modsBig(mods.begin(), mods.end());
  IntMatrix lambda = IntMatrix::diagonal(modsBig);

  // cocycle lattice
  IntMatrix numer;
  if (degree == m.n()) {
    numer = IntMatrix::identity(r);
  } else {
    IntMatrix d = koszul_differential(m, degree);
    auto modsUp = koszul_cochain_moduli(m, degree + 1);
    std::vector<BigInt> upBig(modsUp.begin(), modsUp.end());
    IntMatrix kb = kernel_basis(d.augmented(IntMatrix::diagonal(upBig)));
    numer = kb.topRows(r);
  }
  // coboundary lattice (always contains the cochain relations)
  IntMatrix denom = lambda;
  if (degree > 0) {
    IntMatrix dPrev = koszul_differential(m, degree - 1);
    denom = dPrev.augmented(lambda);
  }
  h.sq_.emplace(numer, denom);
  h.group_ = h.sq_->group();
  h.reps_ = h.sq_->representatives();

  // cochain bound: |H^i| divides |M|^(n choose i)
  long long bound = 1;
  for (long long d : mods) bound *= d;
  if (bound % h.group_.order() != 0)
    throw internal_error("cohomology order exceeds cochain bound");
  return h;
}

FinAbHom equivariant_action_on_h(const ZnModule& m, std::size_t degree,
                                 const FinAbHom& u) {
  if (!(u.domain() == m.group()) || !(u.codomain() == m.group()))
    throw std::invalid_argument("u does not act on the module group");
  for (std::size_t j = 0; j < m.n(); ++j)
    if (!u.commutesWith(m.sigma(j)))
      throw std::invalid_argument("u does not commute with the action");
  CohomologyGroup h = koszul_cohomology(m, degree);
  if (h.group().isTrivial())
    return FinAbHom::identity(h.group());
  std::size_t r = m.group().rank();
  std::size_t blocks = h.cochainModuli().size() / r;
  IntMatrix out(h.group().rank(), h.group().rank());
  for (std::size_t g = 0; g < h.group().rank(); ++g) {
    // apply u blockwise to the representative cocycle
    std::vector<BigInt> image(h.cochainModuli().size(), 0);
    for (std::size_t blk = 0; blk < blocks; ++blk)
      for (std::size_t a = 0; a < r; ++a) {
        BigInt acc = 0;
        for (std::size_t b = 0; b < r; ++b)
          acc += u.matrix().at(a, b) * h.representatives().at(blk * r + b, g);
        image[blk * r + a] = acc;
      }
    std::vector<long long> imgSmall(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) {
      BigInt v = image[i] % h.cochainModuli()[i];
      if (v < 0) v += h.cochainModuli()[i];
      imgSmall[i] = to_int64(v);
    }
    FinAb::Elem cls = h.projectCocycle(imgSmall);
    for (std::size_t i = 0; i < cls.size(); ++i) out.at(i, g) = cls[i];
  }
  FinAbHom result(h.group(), h.group(), out);
  if (!result.isAutomorphism())
    throw internal_error("induced map on cohomology is not invertible");
  return result;
}

FinAbHom glnz_action_on_h2(const ZnModule& m, const IntMatrix& g) {
  if (m.n() != 2)
    throw std::invalid_argument("glnz_action_on_h2: module must have n = 2");
  if (!m.actionIsTrivial())
    throw std::invalid_argument("glnz_action_on_h2: action must be trivial");
  if (g.rows() != 2 || g.cols() != 2)
    throw std::invalid_argument("glnz_action_on_h2: g must be 2x2");
  BigInt det = determinant(g);
  if (det != 1 && det != -1)
    throw std::invalid_argument("glnz_action_on_h2: g is not unimodular");
  // With a trivial action the differentials vanish and H^2 is the top
  // cochain space M; pulling the complex back along g acts on the top
  // exterior power, i.e. by det(g).
  CohomologyGroup h = koszul_cohomology(m, 2);
  return FinAbHom::scalar(h.group(), det == 1 ? 1 : -1);
}

}  // namespace loopclass
