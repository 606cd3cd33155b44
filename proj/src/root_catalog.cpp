#include "root_catalog.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace loopclass {

namespace detail {
extern const char* kEala2CatalogTsv;
}

SimpleType::SimpleType(char f, int r) : family(f), rank(r) {
  bool ok = false;
  switch (f) {
    case 'A': ok = r >= 1; break;
    case 'B': ok = r >= 2; break;
    case 'C': ok = r >= 3; break;
    case 'D': ok = r >= 3; break;
    case 'E': ok = r >= 6 && r <= 8; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
    default: ok = false;
  }
  if (!ok) throw std::invalid_argument("illegal simple type");
}

SimpleType SimpleType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("cannot parse simple type");
  char f = static_cast<char>(std::toupper(s[0]));
  int r = 0;
  try {
    std::size_t pos = 0;
    r = std::stoi(s.substr(1), &pos);
    if (pos + 1 != s.size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("cannot parse simple type: " + s);
  }
  return SimpleType(f, r);
}

std::string SimpleType::toString() const {
  return std::string(1, family) + std::to_string(rank);
}

namespace {

/// S3 as permutations of the three nonzero vectors of (Z/2)^2; the
/// permutation sending v_i to v_{perm(i)} extends linearly because every
/// bijection of {e1, e2, e1+e2} does.
std::vector<FinAbHom> trialityAction(const FinAb& center, const GroupRef& s3) {
  // vectors v0 = (1,0), v1 = (0,1), v2 = (1,1)
  const int vecs[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  std::vector<FinAbHom> out;
  for (std::size_t g = 0; g < s3->size(); ++g) {
    // group element = permutation of {0,1,2}, read from its name
    const std::string& nm = s3->name(static_cast<int>(g));
    int p0 = nm[0] - '0', p1 = nm[1] - '0';
    IntMatrix m(2, 2);
    m.at(0, 0) = vecs[p0][0];
    m.at(1, 0) = vecs[p0][1];
    m.at(0, 1) = vecs[p1][0];
    m.at(1, 1) = vecs[p1][1];
    out.emplace_back(center, center, m);
  }
  return out;
}

CenterDatum withInversion(FinAb center) {
  auto out = FiniteGroup::cyclic(2);
  std::vector<FinAbHom> action = {FinAbHom::identity(center),
                                  FinAbHom::scalar(center, -1)};
  return CenterDatum{std::move(center), out, std::move(action)};
}

CenterDatum withSwitch(FinAb center) {
  auto out = FiniteGroup::cyclic(2);
  std::vector<FinAbHom> action = {
      FinAbHom::identity(center),
      FinAbHom(center, center, IntMatrix::fromRows({{0, 1}, {1, 0}}))};
  return CenterDatum{std::move(center), out, std::move(action)};
}

CenterDatum noOuter(FinAb center) {
  auto out = FiniteGroup::trivial();
  std::vector<FinAbHom> action = {FinAbHom::identity(center)};
  return CenterDatum{std::move(center), out, std::move(action)};
}

void validateAction(const CenterDatum& d) {
  for (std::size_t a = 0; a < d.out->size(); ++a) {
    if (!d.action[a].isAutomorphism())
      throw internal_error("center action: not by automorphisms");
    for (std::size_t b = 0; b < d.out->size(); ++b) {
      auto lhs = d.action[a].compose(d.action[b]);
      if (!(lhs == d.action[d.out->mul(static_cast<int>(a),
                                       static_cast<int>(b))]))
        throw internal_error("center action: not a group action");
    }
  }
}

}  // namespace

CenterDatum lookup(const SimpleType& type) {
  CenterDatum d = [&]() -> CenterDatum {
    switch (type.family) {
      case 'A': {
        FinAb c = FinAb::cyclic(type.rank + 1);
        return type.rank == 1 ? noOuter(c) : withInversion(c);
      }
      case 'B':
      case 'C':
        return noOuter(FinAb::cyclic(2));
      case 'D': {
        if (type.rank % 2 == 1) return withInversion(FinAb::cyclic(4));
        FinAb c = FinAb::fromModuli({2, 2});
        if (type.rank == 4) {
          auto s3 = FiniteGroup::symmetric(3);
          return CenterDatum{c, s3, trialityAction(c, s3)};
        }
        return withSwitch(c);
      }
      case 'E':
        if (type.rank == 6) return withInversion(FinAb::cyclic(3));
        if (type.rank == 7) return noOuter(FinAb::cyclic(2));
        return noOuter(FinAb::trivial());
      case 'F':
      case 'G':
        return noOuter(FinAb::trivial());
    }
    throw internal_error("unreachable");
  }();
  validateAction(d);
  return d;
}

std::string ClassKey::name() const {
  switch (kind) {
    case Inner:
      return "g" + std::to_string(q);
    case OuterQuadratic:
      if (sign == 0) return "Eg";
      return sign > 0 ? "Eg+" : "Eg-";
    case OuterCubic:
      return "E3g";
  }
  return "?";
}

namespace {

/// Minimal integer expression evaluator: + - * / with parentheses over the
/// variables n, q, r. Division must be exact.
class ExprParser {
 public:
  ExprParser(const std::string& s, const std::map<char, long long>& vars)
      : s_(s), vars_(vars) {}

  long long parse() {
    long long v = expr();
    if (pos_ != s_.size()) throw std::invalid_argument("trailing expression");
    return v;
  }

 private:
  long long expr() {
    long long v = term();
    while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      char op = s_[pos_++];
      long long rhs = term();
      v = op == '+' ? v + rhs : v - rhs;
    }
    return v;
  }
  long long term() {
    long long v = factor();
    for (;;) {
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        v *= factor();
      } else if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        long long rhs = factor();
        if (rhs == 0 || v % rhs != 0)
          throw std::invalid_argument("inexact division in catalog template");
        v /= rhs;
      } else if (pos_ < s_.size() &&
                 (std::isalpha(static_cast<unsigned char>(s_[pos_])) ||
                  s_[pos_] == '(')) {
        v *= factor();  // juxtaposition: 2n
      } else {
        return v;
      }
    }
  }
  long long factor() {
    if (pos_ >= s_.size()) throw std::invalid_argument("bad expression");
    if (s_[pos_] == '(') {
      ++pos_;
      long long v = expr();
      if (pos_ >= s_.size() || s_[pos_] != ')')
        throw std::invalid_argument("unbalanced parenthesis");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      long long v = 0;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = v * 10 + (s_[pos_++] - '0');
      return v;
    }
    char c = s_[pos_++];
    auto it = vars_.find(c);
    if (it == vars_.end())
      throw std::invalid_argument(std::string("unknown variable ") + c);
    return it->second;
  }

  const std::string& s_;
  std::map<char, long long> vars_;
  std::size_t pos_ = 0;
};

std::string instantiate(const std::string& tmpl,
                        const std::map<char, long long>& vars) {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '$' && i + 1 < tmpl.size() && tmpl[i + 1] == '[') {
      std::size_t close = tmpl.find(']', i + 2);
      if (close == std::string::npos)
        throw internal_error("unterminated template token");
      std::string expr = tmpl.substr(i + 2, close - i - 2);
      out += std::to_string(ExprParser(expr, vars).parse());
      i = close + 1;
    } else {
      out += tmpl[i++];
    }
  }
  return out;
}

std::vector<CatalogRow> parseCatalog(const char* text) {
  std::vector<CatalogRow> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 5) throw internal_error("malformed catalog row");
    rows.push_back(CatalogRow{fields[0][0], fields[1], fields[2], fields[3],
                              fields[4]});
  }
  return rows;
}

/// Does the rank pattern match the concrete rank; if so bind n.
bool matchRanks(const std::string& pattern, int rank, long long& n) {
  // pattern: "r=EXPR" or "r=EXPR,n>=MIN"
  std::string expr = pattern.substr(2);
  long long minN = 1;
  std::size_t comma = expr.find(',');
  if (comma != std::string::npos) {
    std::string cond = expr.substr(comma + 1);  // "n>=MIN"
    minN = std::stoll(cond.substr(3));
    expr = expr.substr(0, comma);
  }
  if (expr == "2n") {
    if (rank % 2 != 0) return false;
    n = rank / 2;
  } else if (expr == "2n-1") {
    if (rank % 2 != 1) return false;
    n = (rank + 1) / 2;
  } else if (expr == "2n+1") {
    if (rank % 2 != 1) return false;
    n = (rank - 1) / 2;
  } else if (expr == "n") {
    n = rank;
  } else {
    return rank == std::stoi(expr);  // exact rank, n unused
  }
  return n >= minN;
}

const CatalogRow& findRow(const SimpleType& type, const std::string& name,
                          long long& n) {
  for (const auto& row : eala2_catalog()) {
    if (row.family != type.family) continue;
    n = 0;
    if (!matchRanks(row.ranks, type.rank, n)) continue;
    if (row.className == name) return row;
    if (row.className == "g_q" && name.size() >= 2 && name[0] == 'g' &&
        std::isdigit(static_cast<unsigned char>(name[1])))
      return row;
  }
  throw std::invalid_argument("unknown classification key: " +
                              type.toString() + " / " + name);
}

std::map<char, long long> bindVars(const SimpleType& type,
                                   const ClassKey& key, long long n) {
  std::map<char, long long> vars{{'n', n}, {'q', key.q}};
  if (type.family == 'A' && key.kind == ClassKey::Inner)
    vars['r'] = std::gcd(key.q, static_cast<long long>(type.rank) + 1);
  return vars;
}

std::string classNameForLookup(const SimpleType& type, const ClassKey& key) {
  std::string name = key.name();
  if (type.family == 'D' && type.rank == 4) {
    if (key.kind == ClassKey::OuterQuadratic)
      name = key.sign > 0 ? "E2g+" : "E2g-";
  }
  return name;
}

}  // namespace

const std::vector<CatalogRow>& eala2_catalog() {
  static const std::vector<CatalogRow> rows =
      parseCatalog(detail::kEala2CatalogTsv);
  return rows;
}

const char* eala2_catalog_text() { return detail::kEala2CatalogTsv; }

std::string tits_index(const SimpleType& type, const ClassKey& key) {
  long long n = 0;
  const CatalogRow& row = findRow(type, classNameForLookup(type, key), n);
  return instantiate(row.indexTemplate, bindVars(type, key, n));
}

std::string relative_type(const SimpleType& type, const ClassKey& key) {
  if (type.family == 'A' && key.kind == ClassKey::Inner && type.rank >= 2) {
    // computable rule: relative rank r - 1 with r = gcd(q, rank + 1)
    long long r = std::gcd(key.q, static_cast<long long>(type.rank) + 1);
    return "A_" + std::to_string(r - 1);
  }
  long long n = 0;
  const CatalogRow& row = findRow(type, classNameForLookup(type, key), n);
  return instantiate(row.relativeTemplate, bindVars(type, key, n));
}

}  // namespace loopclass
