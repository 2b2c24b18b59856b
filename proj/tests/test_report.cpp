#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ppl/report.hpp"
#include "ppl/runner.hpp"

using namespace ppl;

namespace {

// Minimal structural validation against the shipped schema: required keys,
// primitive types, and enum membership.
bool type_matches(const nlohmann::json &value, const std::string &type) {
  if (type == "string")
    return value.is_string();
  if (type == "integer")
    return value.is_number_integer();
  if (type == "object")
    return value.is_object();
  if (type == "array")
    return value.is_array();
  return true;
}

bool validate(const nlohmann::json &value, const nlohmann::json &schema) {
  if (schema.contains("type") &&
      !type_matches(value, schema["type"].get<std::string>()))
    return false;
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto &opt : schema["enum"])
      found = found || opt == value;
    if (!found)
      return false;
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto &key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          return false;
    if (schema.contains("properties"))
      for (const auto &[key, sub] : schema["properties"].items())
        if (value.contains(key) && !validate(value.at(key), sub))
          return false;
  }
  if (value.is_array() && schema.contains("items"))
    for (const auto &item : value)
      if (!validate(item, schema["items"]))
        return false;
  return true;
}

nlohmann::json load_schema() {
  std::ifstream in(std::string(SOURCE_DIR) + "/schema/report.schema.json");
  REQUIRE(in.good());
  nlohmann::json schema;
  in >> schema;
  return schema;
}

RunConfig quick_config() {
  RunConfig cfg;
  cfg.threads = 1;
  return cfg;
}

} // namespace

TEST_CASE("csv quoting follows RFC 4180") {
  CHECK(csv_quote("plain") == "plain");
  CHECK(csv_quote("with,comma") == "\"with,comma\"");
  CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_quote("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("report serialization round trip") {
  Report r;
  r.command = "demo";
  r.config = {{"primes", {5}}, {"threads", 1}};
  r.claims.push_back({"a", "ref", "1", "1", "ok", ""});
  r.claims.push_back({"b", "ref", "2", "3", "fail", "note"});
  r.elapsed_ms = 7;
  CHECK_FALSE(r.all_ok());
  CHECK(r.failure_count() == 1);

  const nlohmann::json j = r.to_json();
  CHECK(j["command"] == "demo");
  CHECK(j["claims"].size() == 2);
  CHECK(j["claims"][1]["note"] == "note");

  const std::string csv = r.to_csv();
  CHECK(csv.find("id,paper_ref,expected,computed,status,note\r\n") == 0);
  CHECK(csv.find("b,ref,2,3,fail,note\r\n") != std::string::npos);

  CHECK(r.render("plain").find("1 claim(s) failed") != std::string::npos);
  CHECK_THROWS_AS(r.render("yaml"), std::invalid_argument);
}

TEST_CASE("command reports validate against the shipped schema") {
  const nlohmann::json schema = load_schema();
  const RunConfig cfg = quick_config();
  CHECK(validate(run_snakes(6, true, cfg).to_json(), schema));
  CHECK(validate(run_series_check(8, cfg).to_json(), schema));
  CHECK(validate(run_hilbert(2, 5, true, true, Rat(2), cfg).to_json(), schema));
  CHECK(validate(run_ideal_dims(4, cfg).to_json(), schema));
}

TEST_CASE("run config validation") {
  RunConfig cfg = quick_config();
  cfg.primes = {2147483647ull, 2147483647ull};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.primes = {15ull};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = quick_config();
  cfg.threads = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("snakes command content") {
  Report r = run_snakes(10, true, quick_config());
  CHECK(r.all_ok());
  bool found = false;
  for (const Claim &c : r.claims)
    if (c.id == "E(10)") {
      CHECK(c.computed == "50521");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("ideal-dims command reports certificates and formula comparison") {
  Report r = run_ideal_dims(4, quick_config());
  CHECK(r.all_ok());
  for (const Claim &c : r.claims) {
    if (c.id == "ideal_dim n=4") {
      CHECK(c.computed == "8");
      CHECK(c.note.find("exact") != std::string::npos);
    }
    if (c.id == "preplactic_dim n=4")
      CHECK(c.computed == "16");
  }
}

TEST_CASE("capacity overflow emits a failing claim") {
  Report r = run_ideal_dims(10, quick_config());
  CHECK_FALSE(r.all_ok());
  CHECK(r.claims.back().id.find("capacity") != std::string::npos);
}

TEST_CASE("result cache records and replays ranks") {
  const std::string path = "/tmp/ppl_cache_test.json";
  std::remove(path.c_str());
  RunConfig cfg = quick_config();
  cfg.cache_path = path;
  Report first = run_ideal_dims(4, cfg);
  CHECK(first.all_ok());
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json records;
  in >> records;
  CHECK(records.is_array());
  CHECK(records.size() > 0);
  CHECK(records[0].contains("computation-id"));
  CHECK(records[0].contains("rank"));
  CHECK(records[0].contains("timestamp"));

  Report second = run_ideal_dims(4, cfg);
  CHECK(second.all_ok());
  bool hit = false;
  for (const Claim &c : second.claims)
    hit = hit || c.note.find("cache-hit") != std::string::npos;
  CHECK(hit);
  std::remove(path.c_str());
}

TEST_CASE("rs and knuth printouts") {
  const std::string rs = rs_printout({1, 3, 2});
  CHECK(rs.find("1 2") != std::string::npos);
  CHECK(rs.find("3") != std::string::npos);
  const std::string kn = knuth_printout({1, 3, 2});
  CHECK(kn.find("132") != std::string::npos);
  CHECK(kn.find("312") != std::string::npos);
}
