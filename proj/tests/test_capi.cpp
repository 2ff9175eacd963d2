// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "pvform/pvform.h"

namespace {

const char* kDataDir = PVFORM_TEST_DATA_DIR;

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(pvf_status_name(PVF_OK)) == "ok");
  CHECK(std::strlen(pvf_status_name(PVF_ERR_PARSE)) > 0);
  CHECK(std::strlen(pvf_version()) > 0);
}

TEST_CASE("space handles") {
  pvf_space* s = nullptr;
  REQUIRE(pvf_space_parse("dim 2\n10\n01\n1 1\n", &s) == PVF_OK);
  size_t dim = 0;
  CHECK(pvf_space_dim(s, &dim) == PVF_OK);
  CHECK(dim == 2);
  int b = -1;
  CHECK(pvf_space_brown(s, &b) == PVF_OK);
  CHECK(b == 2);
  CHECK(pvf_space_brown_decomposition(s, &b) == PVF_OK);
  CHECK(b == 2);
  pvf_report* r = nullptr;
  REQUIRE(pvf_space_report(s, &r) == PVF_OK);
  CHECK(std::string(pvf_report_text(r)).find("brown: 2") != std::string::npos);
  pvf_report_free(r);
  pvf_space_free(s);

  REQUIRE(pvf_space_parse("dim 1\n0\n2\n", &s) == PVF_OK);
  CHECK(pvf_space_brown(s, &b) == PVF_OK);
  CHECK(b == -1);
  pvf_space_free(s);

  s = nullptr;
  CHECK(pvf_space_parse("dim 2\n1", &s) == PVF_ERR_PARSE);
  CHECK(s == nullptr);
  CHECK(std::strlen(pvf_last_error()) > 0);
  CHECK(pvf_space_parse(nullptr, &s) == PVF_ERR_INVALID_ARGUMENT);
  pvf_space_free(nullptr);
}

TEST_CASE("lattice handles") {
  pvf_lattice* l = nullptr;
  REQUIRE(pvf_lattice_parse("sum:E8,U", &l) == PVF_OK);
  size_t rank = 0;
  CHECK(pvf_lattice_rank(l, &rank) == PVF_OK);
  CHECK(rank == 10);
  int sig = 0, brown = 0, equal = 0;
  CHECK(pvf_lattice_check(l, &sig, &brown, &equal) == PVF_OK);
  CHECK(sig == -8);
  CHECK(brown == 0);
  CHECK(equal == 1);
  pvf_lattice_free(l);
  CHECK(pvf_lattice_parse("rank 1\n2\n", &l) != PVF_OK);
}

TEST_CASE("enumeration and diff") {
  int chi = 0, div8 = 0, m = 0;
  CHECK(pvf_components_info("4V1+2S", &chi, &div8, &m) == PVF_OK);
  CHECK(chi == 8);
  CHECK(div8 == 1);
  CHECK(m == 1);

  pvf_rows* rows = nullptr;
  REQUIRE(pvf_enumerate("4V1+2S", nullptr, nullptr, &rows) == PVF_OK);
  CHECK(pvf_rows_count(rows) == 20);
  CHECK(pvf_rows_get(rows, 0) != nullptr);
  CHECK(pvf_rows_get(rows, 20) == nullptr);
  pvf_report* r = nullptr;
  CHECK(pvf_rows_diff(rows, "elliptic-4V1-2S", kDataDir, &r) == PVF_OK);
  CHECK(std::string(pvf_report_text(r)).find("20/20 rows match") != std::string::npos);
  pvf_report_free(r);
  r = nullptr;
  CHECK(pvf_rows_diff(rows, "parabolic", kDataDir, &r) == PVF_ERR_NOT_FOUND);
  pvf_report_free(r);
  pvf_rows_free(rows);

  CHECK(pvf_enumerate("V1", nullptr, nullptr, &rows) == PVF_ERR_PRECONDITION);
  CHECK(std::string(pvf_last_error()).find("≢ 0 mod 8") != std::string::npos);
  CHECK(pvf_enumerate("3X", nullptr, nullptr, &rows) == PVF_ERR_PARSE);

  REQUIRE(pvf_enumerate("V4+S", "V4+S", "0", &rows) == PVF_OK);
  REQUIRE(pvf_rows_count(rows) == 1);
  CHECK(std::string(pvf_rows_get(rows, 0)) == "{(S)+(V4)}|{}  pw1=0");
  pvf_rows_free(rows);

  int sat = 0;
  char pw1[16];
  CHECK(pvf_partition_check("{(2V2)+()}|{(2S)+(2S)}", &sat, pw1, sizeof pw1) == PVF_OK);
  CHECK(sat == 1);
  CHECK(std::string(pw1) == "0,2");
  CHECK(pvf_partition_check("{(4V1+2S)+()}|{}", &sat, pw1, sizeof pw1) == PVF_OK);
  CHECK(sat == 0);
}

TEST_CASE("tables") {
  pvf_report* r = nullptr;
  CHECK(pvf_table_report("hyperbolic", kDataDir, &r) == PVF_OK);
  CHECK(pvf_report_ok(r) == 1);
  pvf_report_free(r);
  r = nullptr;
  CHECK(pvf_table_report("hyperbolic", "/nonexistent-dir", &r) == PVF_ERR_NOT_FOUND);
  CHECK(pvf_table_report("nope", kDataDir, &r) == PVF_ERR_NOT_FOUND);
}

TEST_CASE("arrangements") {
  pvf_arrangement* a = nullptr;
  REQUIRE(pvf_arrangement_parse("P a\nZ- A chi=1 : +1*a\n", &a) == PVF_OK);
  int ok = 0;
  CHECK(pvf_arrangement_solvable(a, &ok) == PVF_OK);
  CHECK(ok == 1);
  pvf_report* r = nullptr;
  CHECK(pvf_fundcycle_report(a, 0, &r) == PVF_OK);
  CHECK(std::string(pvf_report_text(r)).find("lambda=(1) kappa-=(3)") != std::string::npos);
  pvf_report_free(r);
  pvf_arrangement_free(a);

  REQUIRE(pvf_arrangement_parse("P a\n", &a) == PVF_OK);
  CHECK(pvf_arrangement_solvable(a, &ok) == PVF_OK);
  CHECK(ok == 0);
  pvf_arrangement_free(a);
  CHECK(pvf_arrangement_parse("P a\nZ- A : +1*a\n", &a) == PVF_ERR_PARSE);
}

TEST_CASE("selfcheck of a single criterion") {
  pvf_report* r = nullptr;
  CHECK(pvf_selfcheck(kDataDir, 4, &r) == PVF_OK);
  CHECK(std::string(pvf_report_text(r)).find("PASS") != std::string::npos);
  pvf_report_free(r);
  r = nullptr;
  CHECK(pvf_selfcheck("/nonexistent-dir", 5, &r) == PVF_ERR_NOT_FOUND);
  REQUIRE(r != nullptr);
  CHECK(std::string(pvf_report_text(r)).find("MISSING") != std::string::npos);
  pvf_report_free(r);
  CHECK(pvf_selfcheck(kDataDir, 11, &r) == PVF_ERR_INVALID_ARGUMENT);
}
