#include "ppl/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace ppl {

bool Report::all_ok() const { return failure_count() == 0; }

size_t Report::failure_count() const {
  return static_cast<size_t>(
      std::count_if(claims.begin(), claims.end(),
                    [](const Claim &c) { return c.status == "fail"; }));
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["config"] = config;
  j["claims"] = nlohmann::json::array();
  for (const Claim &c : claims) {
    nlohmann::json jc;
    jc["id"] = c.id;
    jc["paper_ref"] = c.paper_ref;
    jc["expected"] = c.expected;
    jc["computed"] = c.computed;
    jc["status"] = c.status;
    if (!c.note.empty())
      jc["note"] = c.note;
    j["claims"].push_back(std::move(jc));
  }
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string csv_quote(const std::string &field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos)
    return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "id,paper_ref,expected,computed,status,note\r\n";
  for (const Claim &c : claims)
    os << csv_quote(c.id) << ',' << csv_quote(c.paper_ref) << ','
       << csv_quote(c.expected) << ',' << csv_quote(c.computed) << ','
       << csv_quote(c.status) << ',' << csv_quote(c.note) << "\r\n";
  return os.str();
}

std::string Report::to_plain() const {
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"id", "expected", "computed", "status", "note"});
  for (const Claim &c : claims)
    rows.push_back({c.id, c.expected, c.computed, c.status, c.note});
  std::array<size_t, 5> width{};
  for (const auto &row : rows)
    for (size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  os << "== " << command << " ==\n";
  for (const auto &row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      os << row[i];
      if (i + 1 < row.size())
        os << std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << '\n';
  }
  os << (all_ok() ? "all claims ok" : std::to_string(failure_count()) +
                                          " claim(s) failed")
     << " (" << elapsed_ms << " ms)\n";
  return os.str();
}

std::string Report::render(const std::string &format) const {
  if (format == "json")
    return to_json().dump(2) + "\n";
  if (format == "csv")
    return to_csv();
  if (format == "plain")
    return to_plain();
  throw std::invalid_argument("Report::render: unknown format " + format);
}

} // namespace ppl
