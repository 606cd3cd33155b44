// Command-line front end. Parses arguments and delegates to the shared
// library through its C interface; all computation lives behind that
// boundary.
#include "loopclass.h"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <string>

namespace {

// takes the handle by reference: it is filled by the call evaluated in the
// first argument position
int emit(lc_status status, lc_result*& result) {
  if (status == LC_OK) {
    std::fwrite(lc_result_data(result), 1, lc_result_size(result), stdout);
    lc_result_free(result);
    result = nullptr;
    return 0;
  }
  std::cerr << "error: " << lc_last_error() << "\n";
  return status == LC_EINVAL ? 2 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"loopclass: exact classification of loop torsors and "
               "multiloop algebra invariants over Laurent rings"};
  app.require_subcommand(1);
  std::string format = "tsv";
  app.add_option("--format", format, "output format: tsv or json")
      ->capture_default_str();

  // classify
  std::string clType, clOver = "r2";
  int clNullity = 2;
  auto* classify = app.add_subcommand(
      "classify", "loop forms of a simple type in nullity 2");
  classify->add_option("--type", clType, "simple type, e.g. D4")->required();
  classify->add_option("--nullity", clNullity, "nullity (2)")
      ->capture_default_str();
  classify->add_option("--over", clOver, "r2 (Laurent ring) or k (base field)")
      ->capture_default_str();

  // table
  std::string tbName, tbTypes;
  auto* table = app.add_subcommand("table", "emit a classification table");
  table->add_option("name", tbName, "table name (eala2)")->required();
  table->add_option("--types", tbTypes,
                    "comma-separated concrete types; default covers every "
                    "catalog row");

  // cohomology
  std::string coDivisors, coSigmas;
  int coDegree = 0, coVars = 0;
  auto* coh = app.add_subcommand(
      "cohomology", "profinite cohomology of a finite twisted module");
  coh->add_option("--divisors", coDivisors, "module divisors, e.g. 2,4")
      ->required();
  coh->add_option("--degree", coDegree, "cohomology degree")->required();
  coh->add_option("-n,--vars", coVars, "number of generators (trivial action)");
  coh->add_option("--sigmas", coSigmas,
                  "one matrix per generator: rows ';', matrices '|'");

  // quadforms
  int qfDim = 0, qfVars = 0;
  bool qfCount = false;
  auto* qf = app.add_subcommand("quadforms",
                                "quadratic form classes over Laurent rings");
  qf->add_option("--dim", qfDim, "form dimension")->required();
  qf->add_option("-n,--vars", qfVars, "number of Laurent variables")
      ->required();
  qf->add_flag("--count", qfCount, "emit the count summary only");

  // g2
  int g2Vars = 0;
  bool g2Quot = false;
  auto* g2 = app.add_subcommand("g2", "octonion classes over Laurent rings");
  g2->add_option("-n,--vars", g2Vars, "number of Laurent variables")
      ->required();
  g2->add_flag("--quotient", g2Quot, "base-change orbit representatives");

  // exceptional3
  std::string e3Type;
  bool e3Quot = false;
  auto* e3 = app.add_subcommand(
      "exceptional3", "anisotropic rank-3 classes for F4, E7, E8");
  e3->add_option("--type", e3Type, "F4, E7 or E8")->required();
  e3->add_flag("--quotient", e3Quot, "base-change orbits");

  // azumaya
  auto* az = app.add_subcommand("azumaya",
                                "finite subgroup data of projective linear "
                                "groups and loop algebra oracles");
  az->require_subcommand(1);
  std::string azChain, azTuple;
  long long azDegree = 0;
  auto* azGen = az->add_subcommand("generators",
                                   "standard generator pairs for a chain");
  azGen->add_option("--chain", azChain, "divisor chain, e.g. 2,2")->required();
  azGen->add_option("--degree", azDegree, "matrix degree")->required();
  auto* azIrr = az->add_subcommand("irreducible",
                                   "irreducibility of a chain in a degree");
  azIrr->add_option("--chain", azChain, "divisor chain")->required();
  azIrr->add_option("--degree", azDegree, "matrix degree")->required();
  auto* azReal = az->add_subcommand(
      "real-table", "degree-d classes over the real Laurent ring");
  azReal->add_option("--degree", azDegree, "algebra degree")->required();
  auto* azOr = az->add_subcommand("oracle",
                                  "degree-2 multiloop relation oracle");
  azOr->add_option("--tuple", azTuple, "generating pair, e.g. \"a;b\"")
      ->required();

  // normal-form
  auto* nf = app.add_subcommand("normal-form",
                                "normal forms of anisotropic loop classes");
  nf->require_subcommand(1);
  std::string nfChain, nfTuple;
  auto* nfBr = nf->add_subcommand("brussel", "divisor chain and unit twist");
  nfBr->add_option("--chain", nfChain, "divisor chain, e.g. 5")->required();
  nfBr->add_option("--tuple", nfTuple, "tuple, e.g. \"a;3b\"")->required();

  // verify
  app.add_subcommand("verify", "run the built-in oracle suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // unknown command / malformed arguments
  }

  const char* fmt = format.c_str();
  lc_result* result = nullptr;
  if (classify->parsed())
    return emit(lc_classify(clType.c_str(), clNullity, clOver.c_str(), fmt,
                            &result),
                result);
  if (table->parsed()) {
    if (tbName != "eala2") {
      std::cerr << "error: unknown table '" << tbName << "'\n";
      return 2;
    }
    return emit(lc_table_eala2(tbTypes.c_str(), fmt, &result), result);
  }
  if (coh->parsed())
    return emit(lc_cohomology(coDivisors.c_str(), coVars, coSigmas.c_str(),
                              coDegree, fmt, &result),
                result);
  if (qf->parsed())
    return emit(lc_quadforms(qfDim, qfVars, qfCount ? 1 : 0, fmt, &result),
                result);
  if (g2->parsed())
    return emit(lc_g2(g2Vars, g2Quot ? 1 : 0, fmt, &result), result);
  if (e3->parsed())
    return emit(lc_exceptional3(e3Type.c_str(), e3Quot ? 1 : 0, fmt, &result),
                result);
  if (az->parsed()) {
    if (azGen->parsed())
      return emit(
          lc_azumaya_generators(azChain.c_str(), azDegree, fmt, &result),
          result);
    if (azIrr->parsed())
      return emit(
          lc_azumaya_irreducible(azChain.c_str(), azDegree, fmt, &result),
          result);
    if (azReal->parsed())
      return emit(lc_azumaya_real_table(azDegree, fmt, &result), result);
    if (azOr->parsed())
      return emit(lc_azumaya_oracle(azTuple.c_str(), fmt, &result), result);
  }
  if (nf->parsed() && nfBr->parsed())
    return emit(
        lc_normal_form_brussel(nfChain.c_str(), nfTuple.c_str(), fmt, &result),
        result);
  if (app.get_subcommand("verify")->parsed())
    return emit(lc_verify(fmt, &result), result);
  std::cerr << "error: no command\n";
  return 2;
}
