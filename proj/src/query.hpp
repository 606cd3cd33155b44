#pragma once

#include "azumaya.hpp"
#include "serialize.hpp"

#include <string>
#include <vector>

namespace loopclass {

/// Command implementations shared by the C surface and the test suites.
/// All parameter validation throws std::invalid_argument; broken internal
/// invariants throw internal_error.
namespace queries {

OutTable classify(const std::string& type, int nullity,
                  const std::string& over);
OutTable table_eala2(const std::string& typesCsv);  // empty = default set
OutTable cohomology(const std::string& divisorsCsv, int nvars,
                    const std::string& sigmas, int degree);
OutTable quadforms(int dim, int nvars, bool countOnly);
OutTable g2(int nvars, bool quotient);
OutTable exceptional3(const std::string& type, bool quotient);
OutTable azumaya_generators(const std::string& chainCsv, long long degree);
OutTable azumaya_irreducible(const std::string& chainCsv, long long degree);
OutTable azumaya_real_table(long long degree);
OutTable azumaya_oracle(const std::string& tuple);
OutTable normal_form_brussel(const std::string& chainCsv,
                             const std::string& tuple);
OutTable verify();

/// Comma-separated positive integers.
std::vector<long long> parseChain(const std::string& csv);

/// Semicolon-separated integer words in the block symbols a1,b1,a2,b2,...
/// (bare a/b mean a1/b1); e.g. "a;3b" or "a1+2*b2;-b1;0".
std::vector<MumfordDatum::Elem> parseTuple(const std::string& text,
                                           const MumfordDatum& datum);

}  // namespace queries

}  // namespace loopclass
