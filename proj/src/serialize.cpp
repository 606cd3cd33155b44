#include "serialize.hpp"

#include "int_matrix.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace loopclass {

void OutTable::addRow(std::vector<std::string> row) {
  if (row.size() != columns.size())
    throw internal_error("output row width mismatch");
  rows.push_back(std::move(row));
}

std::string to_tsv(const OutTable& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? "\t" : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "\t" : "") << row[i];
    os << "\n";
  }
  for (const auto& note : t.notes) os << "# " << note << "\n";
  return os.str();
}

std::string to_json(const OutTable& t) {
  nlohmann::ordered_json j;
  j["command"] = t.command;
  j["columns"] = t.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
    j["rows"].push_back(obj);
  }
  j["notes"] = t.notes;
  return j.dump(2) + "\n";
}

std::string render(const OutTable& t, const std::string& format) {
  if (format == "tsv" || format.empty()) return to_tsv(t);
  if (format == "json") return to_json(t);
  throw std::invalid_argument("unknown output format: " + format);
}

}  // namespace loopclass
