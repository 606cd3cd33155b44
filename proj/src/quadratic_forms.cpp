#include "quadratic_forms.hpp"

#include "int_matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace loopclass {

LaurentDiagonalForm::LaurentDiagonalForm(int n, std::vector<std::uint32_t> e)
    : nvars(n), entries(std::move(e)) {
  if (n < 0 || n > 20) throw std::invalid_argument("bad variable count");
  for (std::uint32_t mask : entries)
    if (mask >= (1u << n))
      throw std::invalid_argument("monomial uses a variable out of range");
  std::sort(entries.begin(), entries.end());
}

WittClass springer_normal_form(const LaurentDiagonalForm& q) {
  std::map<std::uint32_t, int> mult;
  for (std::uint32_t m : q.entries) mult[m]++;
  WittClass w;
  w.nvars = q.nvars;
  for (const auto& [mask, count] : mult) {
    w.hyperbolicRank += count / 2;
    if (count % 2) w.anisotropic.push_back(mask);
  }
  if (w.dimension() != q.dimension())
    throw internal_error("springer decomposition changed the dimension");
  return w;
}

bool is_isometric(const LaurentDiagonalForm& a, const LaurentDiagonalForm& b) {
  if (a.nvars != b.nvars)
    throw std::invalid_argument("isometry test across variable counts");
  return springer_normal_form(a) == springer_normal_form(b);
}

std::vector<WittClass> classify_od(int d, int n) {
  if (d < 1 || n < 0 || n > 16)
    throw std::invalid_argument("classify_od: bad dimension or variables");
  std::vector<WittClass> out;
  int masks = 1 << n;
  for (int j = d % 2; j <= std::min(d, masks); j += 2) {
    // all j-subsets of the 2^n monomials, lexicographic
    std::vector<int> idx(j);
    for (int i = 0; i < j; ++i) idx[i] = i;
    for (;;) {
      WittClass w;
      w.nvars = n;
      for (int i : idx) w.anisotropic.push_back(static_cast<std::uint32_t>(i));
      w.hyperbolicRank = (d - j) / 2;
      out.push_back(std::move(w));
      int t = j - 1;
      while (t >= 0 && idx[t] == masks - j + t) --t;
      if (t < 0) break;
      ++idx[t];
      for (int i = t + 1; i < j; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}
}  // namespace

OdCount classify_od_counts(int d, int n) {
  OdCount c;
  c.computed = static_cast<long long>(classify_od(d, n).size());
  for (int j = d % 2; j <= std::min(d, n); j += 2)
    c.subsetParametrization += binomial(n, j);
  c.discrepancy = c.computed != c.subsetParametrization;
  return c;
}

std::string monomialName(std::uint32_t mask) {
  if (mask == 0) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) {
      os << (first ? "" : "*") << "t" << (i + 1);
      first = false;
    }
  return os.str();
}

std::string wittClassName(const WittClass& w) {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < w.anisotropic.size(); ++i)
    os << (i ? "," : "") << monomialName(w.anisotropic[i]);
  os << ">";
  if (w.hyperbolicRank > 0) os << "+H^" << w.hyperbolicRank;
  return os.str();
}

}  // namespace loopclass
