// SPDX-License-Identifier: Apache-2.0
#include "pvform/tables.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "pvform/error.hpp"

namespace pvform {

std::vector<ClassificationRow> ReferenceTable::all_rows() const {
  std::vector<ClassificationRow> out;
  for (const auto& c : cases) out.insert(out.end(), c.rows.begin(), c.rows.end());
  return out;
}

const std::vector<std::string>& table_labels() {
  static const std::vector<std::string> labels{"elliptic-4V1-2S", "parabolic", "hyperbolic", "other"};
  return labels;
}

ReferenceTable parse_reference_table(std::string_view text) {
  ReferenceTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto where = [&] { return "reference line " + std::to_string(lineno) + ": "; };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto space = line.find(' ');
    const std::string head = line.substr(0, space);
    const std::string rest = space == std::string::npos ? std::string{} : line.substr(space + 1);
    if (head == "table") {
      t.label = rest;
    } else if (head == "title") {
      t.title = rest;
    } else if (head == "case") {
      t.cases.push_back({rest, {}});
    } else {
      if (t.cases.empty()) fail(Errc::parse_error, where() + "row before any 'case' line");
      try {
        t.cases.back().rows.push_back(parse_row(line));
      } catch (const Error& e) {
        fail(Errc::parse_error, where() + e.what());
      }
    }
  }
  if (t.label.empty()) fail(Errc::parse_error, "reference table lacks a 'table' header");
  if (t.title.empty()) fail(Errc::parse_error, "reference table lacks a 'title' header");
  return t;
}

ReferenceTable load_reference_table(const std::string& label, const std::string& data_dir) {
  const auto& labels = table_labels();
  if (std::find(labels.begin(), labels.end(), label) == labels.end())
    fail(Errc::not_found, "unknown table '" + label + "'");
  const std::string path = data_dir + "/" + label + ".txt";
  std::ifstream f(path);
  if (!f) fail(Errc::not_found, "reference file not found: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  auto table = parse_reference_table(buf.str());
  if (table.label != label) fail(Errc::parse_error, path + ": header names table '" + table.label + "'");
  return table;
}

namespace {

std::string row_key(const ClassificationRow& r) {
  return r.partition.canonical().to_string() + "  pw1=" + r.pw1.to_string();
}

std::string split_key(const std::array<SurfaceUnion, 2>& s) { return s[0].to_string() + " | " + s[1].to_string(); }

std::array<SurfaceUnion, 2> half_split(const QuoterPartition& p) {
  const auto c = p.canonical();
  return {c.half(0), c.half(1)};
}

}  // namespace

RowDiff diff_rows(const std::vector<ClassificationRow>& actual, const std::vector<ClassificationRow>& reference) {
  std::set<std::string> a, r;
  for (const auto& x : actual) a.insert(row_key(x));
  for (const auto& x : reference) r.insert(row_key(x));
  RowDiff d;
  d.expected = r.size();
  for (const auto& k : r) {
    if (a.count(k))
      ++d.matched;
    else
      d.missing.push_back(k);
  }
  for (const auto& k : a)
    if (!r.count(k)) d.extra.push_back(k);
  return d;
}

std::vector<std::array<SurfaceUnion, 2>> listed_half_splits(const std::vector<ClassificationRow>& rows) {
  std::vector<std::array<SurfaceUnion, 2>> out;
  std::set<std::string> seen;
  for (const auto& r : rows) {
    const auto s = half_split(r.partition);
    if (seen.insert(split_key(s)).second) out.push_back(s);
  }
  return out;
}

namespace {

void print_diff(std::ostringstream& os, const RowDiff& d) {
  for (const auto& m : d.missing) os << "  missing: " << m << '\n';
  for (const auto& e : d.extra) os << "  extra:   " << e << '\n';
}

// Rows of the listed decompositions, plus the full enumeration's surplus.
void report_listed_splits(std::ostringstream& os, const ReferenceCase& c, TableReport& report, bool full_note) {
  const SurfaceUnion u = parse_components(c.label);
  std::vector<ClassificationRow> rows;
  for (const auto& split : listed_half_splits(c.rows)) {
    EnumerateOptions opt;
    opt.halves = split;
    const auto part = enumerate_separations(u, opt);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  for (const auto& r : rows) os << r.to_string() << '\n';
  const auto d = diff_rows(rows, c.rows);
  print_diff(os, d);
  os << "  " << d.matched << "/" << d.expected << " rows match" << (d.extra.empty() ? "" : ", with extras") << '\n';
  report.matched += d.matched;
  report.expected += d.expected;
  report.match = report.match && d.equal();

  if (!full_note) return;
  const auto full = enumerate_separations(u);
  std::set<std::string> listed;
  for (const auto& r : rows) listed.insert(row_key(r));
  std::vector<std::string> surplus;
  for (const auto& r : full)
    if (!listed.count(row_key(r))) surplus.push_back(row_key(r));
  if (surplus.empty()) {
    os << "  note: full enumeration adds no rows on other half decompositions\n";
  } else {
    os << "  note: full enumeration adds " << surplus.size() << " rows on half decompositions not listed:\n";
    for (const auto& s : surplus) os << "    " << s << '\n';
  }
}

void report_unique_per_split(std::ostringstream& os, const ReferenceCase& c, TableReport& report) {
  for (const auto& ref : c.rows) {
    const auto split = half_split(ref.partition);
    EnumerateOptions opt;
    opt.halves = split;
    const auto rows = enumerate_separations(ref.partition.components(), opt);
    const bool ok = rows.size() == 1 && row_key(rows.front()) == row_key(ref);
    ++report.expected;
    if (ok) ++report.matched;
    report.match = report.match && ok;
    os << (ok ? "ok    " : "FAIL  ") << row_key(ref);
    if (!ok) {
      os << "  (" << rows.size() << " satisfiable separations:";
      for (const auto& r : rows) os << " " << row_key(r) << ";";
      os << ")";
    }
    os << '\n';
  }
}

void report_satisfiable(std::ostringstream& os, const ReferenceCase& c, TableReport& report) {
  for (const auto& ref : c.rows) {
    const auto assignment = ergm_satisfiable(ref.partition);
    std::string got = "unsatisfiable";
    bool ok = false;
    if (assignment) {
      const Pw1 pw1 = pw1_set(ref.partition);
      got = "pw1=" + pw1.to_string();
      ok = pw1 == ref.pw1;
    }
    ++report.expected;
    if (ok) ++report.matched;
    report.match = report.match && ok;
    os << (ok ? "ok    " : "FAIL  ") << ref.to_string();
    if (!ok) os << "  (got " << got << ")";
    os << '\n';
  }
}

}  // namespace

TableReport table_report(const ReferenceTable& table) {
  TableReport report;
  report.label = table.label;
  report.match = true;
  std::ostringstream os;
  os << "table " << table.label << ": " << table.title << '\n';
  for (const auto& c : table.cases) {
    os << "case " << c.label << '\n';
    if (table.label == "elliptic-4V1-2S") {
      const auto rows = enumerate_separations(parse_components(c.label));
      for (const auto& r : rows) os << r.to_string() << '\n';
      const auto d = diff_rows(rows, c.rows);
      print_diff(os, d);
      os << "  " << d.matched << "/" << d.expected << " rows match" << (d.extra.empty() ? "" : ", with extras") << '\n';
      report.matched += d.matched;
      report.expected += d.expected;
      report.match = report.match && d.equal();
    } else if (table.label == "parabolic") {
      report_listed_splits(os, c, report, true);
    } else if (table.label == "hyperbolic") {
      report_unique_per_split(os, c, report);
    } else if (table.label == "other") {
      report_satisfiable(os, c, report);
    } else {
      fail(Errc::not_found, "no report defined for table '" + table.label + "'");
    }
  }
  os << (report.match ? "MATCH " : "MISMATCH ") << report.matched << "/" << report.expected << '\n';
  report.text = os.str();
  return report;
}

}  // namespace pvform
