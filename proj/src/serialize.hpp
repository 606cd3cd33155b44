#pragma once

#include <string>
#include <vector>

namespace loopclass {

/// Row-oriented command output; renders identically structured TSV and
/// JSON (the two emissions carry the same records).
struct OutTable {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;

  void addRow(std::vector<std::string> row);
};

std::string to_tsv(const OutTable& t);
std::string to_json(const OutTable& t);

/// format is "tsv" or "json"; anything else is a validation error.
std::string render(const OutTable& t, const std::string& format);

}  // namespace loopclass
