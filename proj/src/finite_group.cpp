#include "finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace loopclass {

FiniteGroup::FiniteGroup(std::vector<int> table, std::vector<std::string> names)
    : n_(names.size()), table_(std::move(table)), names_(std::move(names)) {
  if (table_.size() != n_ * n_) throw internal_error("bad group table size");
  validate();
  inv_.assign(n_, -1);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (table_[a * n_ + b] == 0) inv_[a] = static_cast<int>(b);
}

void FiniteGroup::validate() const {
  for (std::size_t a = 0; a < n_; ++a) {
    if (table_[a * n_] != static_cast<int>(a) ||
        table_[a] != static_cast<int>(a))
      throw internal_error("group table: 0 is not an identity");
    std::set<int> row(table_.begin() + a * n_, table_.begin() + (a + 1) * n_);
    if (row.size() != n_) throw internal_error("group table: row not a bijection");
  }
  if (n_ <= 64) {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw internal_error("group table: not associative");
  }
}

GroupRef FiniteGroup::fromTable(std::vector<std::vector<int>> table,
                                std::vector<std::string> names) {
  std::vector<int> flat;
  for (const auto& row : table)
    flat.insert(flat.end(), row.begin(), row.end());
  return GroupRef(new FiniteGroup(std::move(flat), std::move(names)));
}

GroupRef FiniteGroup::trivial() { return cyclic(1); }

GroupRef FiniteGroup::cyclic(std::size_t m) {
  if (m == 0) throw std::invalid_argument("cyclic: order must be >= 1");
  std::vector<int> t(m * m);
  std::vector<std::string> names(m);
  for (std::size_t a = 0; a < m; ++a) {
    names[a] = std::to_string(a);
    for (std::size_t b = 0; b < m; ++b) t[a * m + b] = (a + b) % m;
  }
  return GroupRef(new FiniteGroup(std::move(t), std::move(names)));
}

GroupRef FiniteGroup::symmetric(std::size_t k) {
  if (k > 6) throw std::invalid_argument("symmetric: k too large");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::size_t n = perms.size();
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < n; ++i) index[perms[i]] = static_cast<int>(i);
  std::vector<int> t(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::ostringstream os;
    for (int v : perms[a]) os << v;
    names[a] = os.str();
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> comp(k);  // (a o b)(x) = a[b[x]]
      for (std::size_t x = 0; x < k; ++x) comp[x] = perms[a][perms[b][x]];
      t[a * n + b] = index[comp];
    }
  }
  return GroupRef(new FiniteGroup(std::move(t), std::move(names)));
}

GroupRef FiniteGroup::dihedral(std::size_t k) {
  if (k < 1) throw std::invalid_argument("dihedral: k must be >= 1");
  // elements (i, f): rotation r^i, optionally flipped; (i,f)*(j,g) with
  // composition convention matching r^i s^f r^j s^g.
  std::size_t n = 2 * k;
  auto idx = [&](long long i, int f) {
    return static_cast<int>(((i % static_cast<long long>(k) + k) % k) + k * f);
  };
  std::vector<int> t(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    long long ia = static_cast<long long>(a % k);
    int fa = a >= k ? 1 : 0;
    names[a] = (fa ? "sr" : "r") + std::to_string(ia);
    for (std::size_t b = 0; b < n; ++b) {
      long long ib = static_cast<long long>(b % k);
      int fb = b >= k ? 1 : 0;
      long long i = fa == 0 ? ia + ib : ia - ib;
      t[a * n + b] = idx(i, fa ^ fb);
    }
  }
  return GroupRef(new FiniteGroup(std::move(t), std::move(names)));
}

GroupRef FiniteGroup::product(const GroupRef& a, const GroupRef& b) {
  std::size_t n = a->size() * b->size();
  std::vector<int> t(n * n);
  std::vector<std::string> names(n);
  auto idx = [&](int x, int y) {
    return static_cast<int>(x * static_cast<int>(b->size()) + y);
  };
  for (std::size_t x = 0; x < a->size(); ++x)
    for (std::size_t y = 0; y < b->size(); ++y) {
      names[idx(x, y)] = "(" + a->name(x) + "," + b->name(y) + ")";
      for (std::size_t u = 0; u < a->size(); ++u)
        for (std::size_t v = 0; v < b->size(); ++v)
          t[idx(x, y) * n + idx(u, v)] = idx(a->mul(x, u), b->mul(y, v));
    }
  return GroupRef(new FiniteGroup(std::move(t), std::move(names)));
}

int FiniteGroup::power(int a, long long e) const {
  int base = a;
  if (e < 0) {
    base = inv(a);
    e = -e;
  }
  int acc = identity();
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

long long FiniteGroup::elementOrder(int a) const {
  long long o = 1;
  int x = a;
  while (x != identity()) {
    x = mul(x, a);
    ++o;
  }
  return o;
}

std::vector<int> FiniteGroup::centralizer(int a) const {
  std::vector<int> out;
  for (std::size_t g = 0; g < n_; ++g)
    if (mul(g, a) == mul(a, g)) out.push_back(static_cast<int>(g));
  return out;
}

LoopClass::LoopClass(GroupRef g, std::vector<int> t)
    : target(std::move(g)), tuple(std::move(t)) {
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (target->mul(tuple[i], tuple[j]) != target->mul(tuple[j], tuple[i]))
        throw std::invalid_argument("loop cocycle entries must commute");
}

bool are_conjugate(const LoopClass& c1, const LoopClass& c2) {
  if (c1.target != c2.target)
    throw std::invalid_argument("conjugacy test across different groups");
  if (c1.n() != c2.n())
    throw std::invalid_argument("conjugacy test across different nullities");
  const FiniteGroup& g = *c1.target;
  for (std::size_t h = 0; h < g.size(); ++h) {
    bool ok = true;
    for (std::size_t i = 0; i < c1.n() && ok; ++i)
      ok = g.conjugate(static_cast<int>(h), c1.tuple[i]) == c2.tuple[i];
    if (ok) return true;
  }
  return false;
}

std::vector<int> canonical_tuple(const GroupRef& g,
                                 const std::vector<int>& tuple) {
  std::vector<int> best;
  for (std::size_t h = 0; h < g->size(); ++h) {
    std::vector<int> cand(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i)
      cand[i] = g->conjugate(static_cast<int>(h), tuple[i]);
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

namespace {

void enumerateCommuting(const GroupRef& g, std::size_t n,
                        std::vector<int>& cur,
                        std::set<std::vector<int>>& canon) {
  if (cur.size() == n) {
    canon.insert(canonical_tuple(g, cur));
    return;
  }
  for (std::size_t x = 0; x < g->size(); ++x) {
    bool ok = true;
    for (int y : cur)
      if (g->mul(static_cast<int>(x), y) != g->mul(y, static_cast<int>(x))) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(static_cast<int>(x));
    enumerateCommuting(g, n, cur, canon);
    cur.pop_back();
  }
}

}  // namespace

std::vector<LoopClass> classify_commuting_tuples(const GroupRef& g,
                                                 std::size_t n) {
  std::set<std::vector<int>> canon;
  std::vector<int> cur;
  enumerateCommuting(g, n, cur, canon);
  std::vector<LoopClass> out;
  out.reserve(canon.size());
  for (const auto& t : canon) out.emplace_back(g, t);
  return out;
}

std::vector<int> apply_base_change(const GroupRef& grp,
                                   const std::vector<int>& tuple,
                                   const IntMatrix& g) {
  if (g.rows() != tuple.size() || g.cols() != tuple.size())
    throw std::invalid_argument("base change matrix has wrong size");
  std::vector<int> out(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    int acc = grp->identity();
    for (std::size_t j = 0; j < tuple.size(); ++j)
      acc = grp->mul(acc, grp->power(tuple[j], to_int64(g.at(i, j))));
    out[i] = acc;
  }
  return out;
}

std::vector<std::vector<std::size_t>> glnz_orbits(
    const std::vector<LoopClass>& classes, std::size_t n) {
  if (classes.empty()) return {};
  const GroupRef& g = classes.front().target;
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].target != g)
      throw std::invalid_argument("classes target different groups");
    index[canonical_tuple(g, classes[i].tuple)] = i;
  }
  std::vector<IntMatrix> gens = glnz_generators(n);
  {
    std::size_t count = gens.size();
    for (std::size_t i = 0; i < count; ++i)
      gens.push_back(unimodular_inverse(gens[i]));
  }
  std::vector<std::size_t> comp(classes.size(), SIZE_MAX);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t start = 0; start < classes.size(); ++start) {
    if (comp[start] != SIZE_MAX) continue;
    std::size_t id = orbits.size();
    orbits.push_back({});
    std::queue<std::size_t> work;
    comp[start] = id;
    work.push(start);
    while (!work.empty()) {
      std::size_t cur = work.front();
      work.pop();
      orbits[id].push_back(cur);
      for (const IntMatrix& m : gens) {
        auto moved = apply_base_change(g, classes[cur].tuple, m);
        auto key = canonical_tuple(g, moved);
        auto it = index.find(key);
        if (it == index.end())
          throw internal_error("glnz_orbits: class list not closed under action");
        if (comp[it->second] == SIZE_MAX) {
          comp[it->second] = id;
          work.push(it->second);
        }
      }
    }
    std::sort(orbits[id].begin(), orbits[id].end());
  }
  return orbits;
}

}  // namespace loopclass
