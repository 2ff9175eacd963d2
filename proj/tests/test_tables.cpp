// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "pvform/error.hpp"
#include "pvform/tables.hpp"

using namespace pvform;

namespace {

const std::string kDataDir = PVFORM_TEST_DATA_DIR;

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

bool is_row(const std::string& line) { return !line.empty() && line.front() == '{'; }

}  // namespace

TEST_CASE("bundled rows render back byte-identically") {
  for (const auto& label : table_labels()) {
    INFO(label);
    std::istringstream in(read_file(kDataDir + "/" + label + ".txt"));
    std::string line;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
      if (!is_row(line)) continue;
      ++rows;
      CHECK(parse_row(line).to_string() == line);
    }
    const auto table = load_reference_table(label, kDataDir);
    CHECK(table.all_rows().size() == rows);
    CHECK(table.label == label);
    CHECK_FALSE(table.title.empty());
  }
}

TEST_CASE("table reports match the bundled references") {
  const std::pair<const char*, std::size_t> expected[] = {
      {"elliptic-4V1-2S", 20}, {"parabolic", 37}, {"hyperbolic", 18}, {"other", 29}};
  for (const auto& [label, rows] : expected) {
    INFO(label);
    const auto report = table_report(load_reference_table(label, kDataDir));
    CHECK(report.match);
    CHECK(report.matched == rows);
    CHECK(report.expected == rows);
    CHECK(report.text == table_report(load_reference_table(label, kDataDir)).text);
  }
}

TEST_CASE("diff_rows") {
  const auto a = parse_row("{(V2)+(V2)}|{(2S)+(2S)}  pw1=0");
  const auto b = parse_row("{(V2)+(V2)}|{(3S)+(S)}  pw1=2");
  const auto c = parse_row("{(V2)+(V2)}|{(2S)+(2S)}  pw1=0,2");
  const auto d = diff_rows({a, b}, {a, c});
  CHECK(d.matched == 1);
  CHECK(d.expected == 2);
  CHECK(d.missing.size() == 1);
  CHECK(d.extra.size() == 1);
  CHECK_FALSE(d.equal());
  CHECK(diff_rows({b, a}, {a, b}).equal());
}

TEST_CASE("corrupted and missing references") {
  CHECK_THROWS_AS(parse_reference_table("title x\ncase y\n{(V1)+()}|{}  pw1=-\n"), Error);
  CHECK_THROWS_AS(parse_reference_table("table x\ncase y\n{(V1)+()}|{}  pw1=-\n"), Error);
  CHECK_THROWS_AS(parse_reference_table("table x\ntitle t\n{(V1)+()}|{}  pw1=-\n"), Error);
  CHECK_THROWS_AS(parse_reference_table("table x\ntitle t\ncase y\n{(V1)+(}|{}  pw1=-\n"), Error);
  try {
    load_reference_table("parabolic", "/nonexistent-dir");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_found);
  }
  CHECK_THROWS_AS(load_reference_table("no-such-table", kDataDir), Error);
}
