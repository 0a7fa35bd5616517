#include <cmath>
#include <cstdlib>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "shadowlab/random.hpp"
#include "shadowlab/table.hpp"

using namespace shadowlab;

TEST_CASE("csv of an empty table is the header alone") {
  const Table table{{"a", "b"}, {}};
  CHECK(render_csv(table) == "a,b\n");
}

TEST_CASE("csv uses shortest round-trip rendering") {
  const Table table{{"a", "b"}, {{1.0, 0.5}}};
  CHECK(render_csv(table) == "a,b\n1,0.5\n");
}

TEST_CASE("integers render without a decimal point") {
  const Table table{{"n", "k"}, {{std::uint64_t{1000000}, std::int64_t{-3}}}};
  CHECK(render_csv(table) == "n,k\n1000000,-3\n");
}

TEST_CASE("format_double round-trips binary64") {
  RandomEngine eng({404, 0});
  for (int i = 0; i < 2000; ++i) {
    const double scale = std::pow(10.0, static_cast<double>(eng.next_u64() % 61) - 30.0);
    const double v = (eng.next_unit() * 2.0 - 1.0) * scale;
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-1.0) == "-1");
}

TEST_CASE("json object keeps schema order") {
  const Table table{{"zeta", "alpha"}, {{1.5, std::int64_t{2}}}};
  const std::string out = render_json(table, JsonShape::object);
  CHECK(out.find("zeta") < out.find("alpha"));
  const auto parsed = nlohmann::json::parse(out);
  CHECK(parsed["zeta"] == 1.5);
  CHECK(parsed["alpha"] == 2);
}

TEST_CASE("json array renders one object per row") {
  const Table table{{"x"}, {{1.0}, {2.0}}};
  const auto parsed = nlohmann::json::parse(render_json(table, JsonShape::array));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[1]["x"] == 2.0);
}

TEST_CASE("schema violations are rejected") {
  const Table ragged{{"a", "b"}, {{1.0}}};
  CHECK_THROWS_AS(render_csv(ragged), std::invalid_argument);
  const Table two_rows{{"a"}, {{1.0}, {2.0}}};
  CHECK_THROWS_AS(render_json(two_rows, JsonShape::object), std::invalid_argument);
}

TEST_CASE("render_table dispatches and terminates with a newline") {
  const Table table{{"a"}, {{1.0}}};
  const std::string csv = render_table(table, OutputFormat::csv);
  const std::string json = render_table(table, OutputFormat::json, JsonShape::object);
  CHECK(csv.back() == '\n');
  CHECK(json.back() == '\n');
}
