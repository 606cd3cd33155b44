#include "query.hpp"

#include "g2.hpp"
#include "koszul.hpp"
#include "nullity2.hpp"
#include "quadratic_forms.hpp"
#include "rank3.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace loopclass::queries {

namespace {

std::vector<std::string> splitOn(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string joinLL(const std::vector<long long>& v, const char* sep = ",") {
  if (v.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string elemString(const FinAb::Elem& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

long long parsePositive(const std::string& s) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 1) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("expected a positive integer, got '" + s +
                                "'");
  }
}

}  // namespace

std::vector<long long> parseChain(const std::string& csv) {
  if (csv.empty()) throw std::invalid_argument("empty chain");
  std::vector<long long> out;
  for (const auto& part : splitOn(csv, ',')) out.push_back(parsePositive(part));
  return out;
}

std::vector<MumfordDatum::Elem> parseTuple(const std::string& text,
                                           const MumfordDatum& datum) {
  std::vector<MumfordDatum::Elem> out;
  for (const auto& entryText : splitOn(text, ';')) {
    MumfordDatum::Elem e(datum.rank(), 0);
    std::size_t i = 0;
    auto skipSpace = [&]() {
      while (i < entryText.size() &&
             std::isspace(static_cast<unsigned char>(entryText[i])))
        ++i;
    };
    bool any = false;
    skipSpace();
    while (i < entryText.size()) {
      long long sign = 1;
      if (entryText[i] == '+' || entryText[i] == '-') {
        sign = entryText[i] == '-' ? -1 : 1;
        ++i;
        skipSpace();
      } else if (any) {
        throw std::invalid_argument("expected + or - between tuple terms");
      }
      long long coef = 1;
      bool sawDigits = false;
      if (i < entryText.size() &&
          std::isdigit(static_cast<unsigned char>(entryText[i]))) {
        coef = 0;
        while (i < entryText.size() &&
               std::isdigit(static_cast<unsigned char>(entryText[i])))
          coef = coef * 10 + (entryText[i++] - '0');
        sawDigits = true;
        skipSpace();
        if (i < entryText.size() && entryText[i] == '*') {
          ++i;
          skipSpace();
        }
      }
      if (i < entryText.size() &&
          (entryText[i] == 'a' || entryText[i] == 'b')) {
        char symbol = entryText[i++];
        long long index = 1;
        if (i < entryText.size() &&
            std::isdigit(static_cast<unsigned char>(entryText[i]))) {
          index = 0;
          while (i < entryText.size() &&
                 std::isdigit(static_cast<unsigned char>(entryText[i])))
            index = index * 10 + (entryText[i++] - '0');
        }
        if (index < 1 || static_cast<std::size_t>(index) > datum.blocks())
          throw std::invalid_argument("tuple symbol index out of range");
        std::size_t coord = 2 * (index - 1) + (symbol == 'b' ? 1 : 0);
        e[coord] += sign * coef;
      } else if (sawDigits) {
        if (coef != 0)
          throw std::invalid_argument(
              "bare integers other than 0 are not tuple terms");
      } else {
        throw std::invalid_argument("malformed tuple entry: '" + entryText +
                                    "'");
      }
      any = true;
      skipSpace();
    }
    if (!any) throw std::invalid_argument("empty tuple entry");
    out.push_back(datum.reduce(e));
  }
  return out;
}

OutTable classify(const std::string& type, int nullity,
                  const std::string& over) {
  if (nullity != 2)
    throw std::invalid_argument(
        "classify handles nullity 2; see the g2 and exceptional3 commands "
        "for the other catalogued nullities");
  SimpleType st = SimpleType::parse(type);
  OutTable t;
  if (over == "r2") {
    t.command = "classify";
    t.columns = {"type", "dynkin_tits", "fiber", "h2_rep", "quasisplit"};
    for (const auto& f : classify_r2(st))
      t.addRow({f.type.toString(), f.dt.label(), f.fiber.toString(),
                elemString(f.rep), f.quasisplit ? "yes" : "no"});
  } else if (over == "k") {
    t.command = "classify";
    t.columns = {"type", "name",   "dynkin_tits",
                 "fiber", "h2_rep", "quasisplit"};
    for (const auto& f : classify_k(st)) {
      std::string name = f.key.name();
      if (st.family == 'D' && st.rank == 4 &&
          f.key.kind == ClassKey::OuterQuadratic)
        name = f.key.sign > 0 ? "E2g+" : "E2g-";
      t.addRow({f.type.toString(), name, f.dtLabel, f.fiber.toString(),
                elemString(f.rep), f.quasisplit ? "yes" : "no"});
    }
  } else {
    throw std::invalid_argument("--over must be r2 or k");
  }
  return t;
}

OutTable table_eala2(const std::string& typesCsv) {
  std::vector<SimpleType> types;
  if (typesCsv.empty()) {
    types = eala_default_types();
  } else {
    for (const auto& part : splitOn(typesCsv, ','))
      types.push_back(SimpleType::parse(part));
  }
  OutTable t;
  t.command = "table";
  t.columns = {"type", "name", "tits_index", "relative", "quasisplit"};
  for (const auto& row : eala_table(types))
    t.addRow({row.type.toString(), row.name, row.titsIndex, row.relative,
              row.quasisplit ? "yes" : "no"});
  return t;
}

OutTable cohomology(const std::string& divisorsCsv, int nvars,
                    const std::string& sigmas, int degree) {
  auto mods = parseChain(divisorsCsv);
  FinAb group = FinAb::fromModuli(mods);
  std::vector<FinAbHom> sig;
  if (sigmas.empty()) {
    if (nvars < 1) throw std::invalid_argument("need -n or --sigmas");
    for (int i = 0; i < nvars; ++i) sig.push_back(FinAbHom::identity(group));
  } else {
    for (const auto& mat : splitOn(sigmas, '|')) {
      auto rows = splitOn(mat, ';');
      if (rows.size() != group.rank())
        throw std::invalid_argument("sigma matrix has wrong row count");
      IntMatrix m(group.rank(), group.rank());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        auto cells = splitOn(rows[i], ',');
        if (cells.size() != group.rank())
          throw std::invalid_argument("sigma matrix has wrong column count");
        for (std::size_t j = 0; j < cells.size(); ++j) {
          try {
            m.at(i, j) = std::stoll(cells[j]);
          } catch (...) {
            throw std::invalid_argument("bad sigma entry: " + cells[j]);
          }
        }
      }
      sig.emplace_back(group, group, m);
    }
    if (nvars > 0 && static_cast<std::size_t>(nvars) != sig.size())
      throw std::invalid_argument("-n disagrees with the sigma count");
  }
  if (degree < 0 || static_cast<std::size_t>(degree) > sig.size())
    throw std::invalid_argument("cohomology degree out of range");
  ZnModule module(group, sig);
  auto h = koszul_cohomology(module, static_cast<std::size_t>(degree));
  OutTable t;
  t.command = "cohomology";
  t.columns = {"degree", "group", "order", "generator", "representative"};
  std::string groupStr = h.group().divisors().empty()
                             ? "1"
                             : joinLL(h.group().divisors());
  if (h.group().isTrivial()) {
    t.addRow({std::to_string(degree), groupStr, "1", "", ""});
  } else {
    for (std::size_t g = 0; g < h.group().rank(); ++g) {
      FinAb::Elem cls(h.group().rank(), 0);
      cls[g] = 1;
      auto rep = h.representativeOf(cls);
      std::vector<long long> repLL(rep.begin(), rep.end());
      t.addRow({std::to_string(degree), groupStr,
                std::to_string(h.group().order()),
                "g" + std::to_string(g + 1), elemString(repLL)});
    }
  }
  return t;
}

OutTable quadforms(int dim, int nvars, bool countOnly) {
  auto counts = classify_od_counts(dim, nvars);
  OutTable t;
  t.command = "quadforms";
  if (counts.discrepancy)
    t.notes.push_back(
        "computed class count differs from the even/odd subset "
        "parametrization (" +
        std::to_string(counts.computed) + " vs " +
        std::to_string(counts.subsetParametrization) +
        "); the subset map does not produce all dimension-" +
        std::to_string(dim) + " classes");
  if (countOnly) {
    t.columns = {"dim", "vars", "count", "subset_parametrization",
                 "discrepancy"};
    t.addRow({std::to_string(dim), std::to_string(nvars),
              std::to_string(counts.computed),
              std::to_string(counts.subsetParametrization),
              counts.discrepancy ? "yes" : "no"});
    return t;
  }
  t.columns = {"class", "anisotropic_dim", "hyperbolic_rank"};
  for (const auto& w : classify_od(dim, nvars))
    t.addRow({wittClassName(w), std::to_string(w.anisotropic.size()),
              std::to_string(w.hyperbolicRank)});
  return t;
}

OutTable g2(int nvars, bool quotient) {
  OutTable t;
  t.command = "g2";
  t.columns = {"class", "rost_invariant"};
  auto classes = quotient ? glnz_quotient_g2(nvars) : classify_g2(nvars);
  for (const auto& c : classes) {
    auto inv = c.trivial ? ExteriorElement{nvars, {}}
                         : rost_invariant(nvars, c.i1, c.i2, c.i3);
    t.addRow({c.toString(), inv.toString()});
  }
  return t;
}

OutTable exceptional3(const std::string& type, bool quotient) {
  OutTable t;
  t.command = "exceptional3";
  if (quotient) {
    t.columns = {"type", "d", "units", "representative"};
    for (const auto& o : glnz_quotient_rank3(type))
      t.addRow({o.datum.groupType, std::to_string(o.datum.d),
                joinLL(o.units, "~"), o.representativeLabel()});
    if (rank3_quotient_has_discrepancy(type))
      t.notes.push_back(
          "computed three base-change orbits for E8 (units {1,4}, {2,3} "
          "mod 5 and {1,5} mod 6); the classical count lists two "
          "(one per subgroup order)");
  } else {
    t.columns = {"type", "d", "unit", "label"};
    for (const auto& c : classify_rank3(type))
      t.addRow({c.datum.groupType, std::to_string(c.datum.d),
                std::to_string(c.unit), c.label()});
  }
  return t;
}

OutTable azumaya_generators(const std::string& chainCsv, long long degree) {
  MumfordDatum datum(parseChain(chainCsv));
  auto gens = mumford_generators(datum, degree);
  OutTable t;
  t.command = "azumaya";
  t.columns = {"generator", "perm", "phases"};
  auto permStr = [](const std::vector<int>& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    return os.str();
  };
  auto phaseStr = [](const std::vector<Phase>& ph) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ph.size(); ++i)
      os << (i ? "," : "") << ph[i].toString();
    return os.str();
  };
  for (std::size_t j = 0; j < gens.size(); ++j) {
    t.addRow({"a" + std::to_string(j + 1), permStr(gens[j].first.perm()),
              phaseStr(gens[j].first.phases())});
    t.addRow({"b" + std::to_string(j + 1), permStr(gens[j].second.perm()),
              phaseStr(gens[j].second.phases())});
  }
  return t;
}

OutTable azumaya_irreducible(const std::string& chainCsv, long long degree) {
  MumfordDatum datum(parseChain(chainCsv));
  OutTable t;
  t.command = "azumaya";
  t.columns = {"chain", "degree", "irreducible"};
  t.addRow({joinLL(datum.chain()), std::to_string(degree),
            is_irreducible(datum, degree) ? "yes" : "no"});
  return t;
}

OutTable azumaya_real_table(long long degree) {
  OutTable t;
  t.command = "azumaya";
  t.columns = {"brauer_class", "quaternion"};
  for (const auto& row : real_nullity1_table(degree))
    t.addRow({row.brauerLabel, row.quaternionLabel});
  return t;
}

OutTable azumaya_oracle(const std::string& tuple) {
  MumfordDatum datum({2});
  auto parsed = parseTuple(tuple, datum);
  bool ok = multiloop_oracle_d2(datum, parsed);
  OutTable t;
  t.command = "azumaya";
  t.columns = {"tuple", "relations_verified"};
  t.addRow({tuple, ok ? "yes" : "no"});
  return t;
}

OutTable normal_form_brussel(const std::string& chainCsv,
                             const std::string& tuple) {
  MumfordDatum datum(parseChain(chainCsv));
  auto parsed = parseTuple(tuple, datum);
  auto form = brussel_normal_form(datum, parsed);
  OutTable t;
  t.command = "normal-form";
  t.columns = {"nullity", "chain", "r1", "name", "presentation", "primary"};
  std::ostringstream pres;
  auto blocks = cyclic_presentation(form);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    pres << (i ? " (x) " : "") << blocks[i].toString();
  std::ostringstream prim;
  auto parts = primary_decomposition(form);
  for (std::size_t i = 0; i < parts.size(); ++i)
    prim << (i ? " (x) " : "") << "p=" << parts[i].first << ":"
         << parts[i].second.name();
  t.addRow({std::to_string(form.nullity), joinLL(form.chain),
            std::to_string(form.r1), form.name(), pres.str(), prim.str()});
  return t;
}

namespace {

void check(OutTable& t, const std::string& name, bool ok) {
  t.addRow({name, ok ? "pass" : "FAIL"});
  if (!ok) throw internal_error("verify failed: " + name);
}

}  // namespace

OutTable verify() {
  OutTable t;
  t.command = "verify";
  t.columns = {"check", "status"};

  {  // Smith reduction transforms and chain
    auto m = IntMatrix::fromRows({{2, 4}, {6, 8}});
    auto s = smith_normal_form(m);
    check(t, "smith.transforms", s.u * m * s.v == s.d);
    check(t, "smith.chain",
          s.d.at(0, 0) == 2 && s.d.at(1, 1) == 4 &&
              abs(determinant(s.u)) == 1 && abs(determinant(s.v)) == 1);
  }
  {  // kernel/image/cokernel order equation
    auto g = FinAb::fromModuli({4, 4});
    auto f = FinAbHom(g, g, IntMatrix::fromRows({{1, 0}, {0, 2}}));
    auto d = hom_kernel_image_cokernel(f);
    check(t, "hom.orders",
          d.kernel.order() * d.image.order() == g.order() &&
              d.cokernel == FinAb::cyclic(2));
  }
  {  // Euler characteristic of a twisted complex
    auto g = FinAb::cyclic(8);
    ZnModule m(g, {FinAbHom::scalar(g, -1), FinAbHom::identity(g)});
    long long num = 1, den = 1;
    for (std::size_t i = 0; i <= 2; ++i) {
      long long h = koszul_cohomology(m, i).group().order();
      (i % 2 ? den : num) *= h;
    }
    check(t, "koszul.euler", num == den);
    check(t, "koszul.h2", koszul_cohomology(m, 2).group() == FinAb::cyclic(2));
  }
  {  // determinant action
    bool ok = true;
    for (long long d = 2; d <= 12; ++d) {
      auto m = ZnModule::trivialAction(FinAb::cyclic(d), 2);
      auto h2 = koszul_cohomology(m, 2);
      for (const auto& g : glnz_generators(2))
        ok = ok && glnz_action_on_h2(m, g) ==
                       FinAbHom::scalar(h2.group(),
                                        to_int64(determinant(g)));
    }
    check(t, "koszul.det_action", ok);
  }
  {  // classification counts
    check(t, "nullity2.d4",
          classify_r2(SimpleType::parse("D4")).size() == 12 &&
              classify_k(SimpleType::parse("D4")).size() == 5);
    check(t, "nullity2.inner",
          classify_r2(SimpleType::parse("E8")).size() == 1 &&
              classify_k(SimpleType::parse("E7")).size() == 2);
  }
  {  // quadratic forms
    check(t, "quadforms.counts",
          classify_od(2, 1).size() == 2 && classify_od(4, 2).size() == 8);
  }
  {  // octonion classes and quotient
    check(t, "g2.counts",
          classify_g2(3).size() == 2 && classify_g2(4).size() == 8 &&
              glnz_quotient_g2(3).size() == 2);
  }
  {  // rank-3 exceptional
    check(t, "rank3.counts",
          classify_rank3("E8").size() == 6 &&
              glnz_quotient_rank3("F4").size() == 1);
  }
  {  // pairing two ways
    MumfordDatum datum({4});
    auto gens = mumford_generators(datum, 4);
    MumfordDatum::Elem a(datum.rank(), 0), b(datum.rank(), 0);
    a[0] = 1;
    b[1] = 1;
    check(t, "azumaya.pairing",
          datum.pairing(a, b) ==
              commutator_phase(gens[0].first, gens[0].second));
    check(t, "azumaya.oracle", multiloop_oracle_d2(MumfordDatum({2}),
                                                   {{1, 0}, {0, 1}}));
  }
  return t;
}

}  // namespace loopclass::queries
