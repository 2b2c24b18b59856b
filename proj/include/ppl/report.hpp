#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ppl {

struct Claim {
  std::string id;
  std::string paper_ref; // which stated result the claim verifies
  std::string expected;
  std::string computed;
  std::string status; // ok | fail | info
  std::string note;   // e.g. certificate, cache provenance
};

struct Report {
  std::string command;
  nlohmann::json config;
  std::vector<Claim> claims;
  int64_t elapsed_ms = 0;

  bool all_ok() const;
  size_t failure_count() const;

  nlohmann::json to_json() const;
  std::string to_csv() const;   // RFC 4180
  std::string to_plain() const; // aligned table
  std::string render(const std::string &format) const;
};

std::string csv_quote(const std::string &field);

} // namespace ppl
