// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pvform/enriques.hpp"

namespace pvform {

struct ReferenceCase {
  std::string label;
  std::vector<ClassificationRow> rows;
};

/// One bundled table: `table <label>`, `title <text>`, then `case <label>`
/// lines each followed by rows in the row grammar. Blank lines and lines
/// starting with '#' are ignored.
struct ReferenceTable {
  std::string label;
  std::string title;
  std::vector<ReferenceCase> cases;

  std::vector<ClassificationRow> all_rows() const;
};

const std::vector<std::string>& table_labels();

ReferenceTable parse_reference_table(std::string_view text);
/// Reads `<data_dir>/<label>.txt`. Throws Errc::not_found for an unknown
/// label or a missing file.
ReferenceTable load_reference_table(const std::string& label, const std::string& data_dir);

struct RowDiff {
  std::size_t matched = 0;
  std::size_t expected = 0;
  std::vector<std::string> missing;
  std::vector<std::string> extra;

  bool equal() const { return missing.empty() && extra.empty(); }
};

/// Set comparison on partition and P(w1); flags are ignored.
RowDiff diff_rows(const std::vector<ClassificationRow>& actual, const std::vector<ClassificationRow>& reference);

struct TableReport {
  std::string label;
  bool match = false;
  std::size_t matched = 0;
  std::size_t expected = 0;
  std::string text;
};

/// Reproduces one bundled table:
///   elliptic-4V1-2S  full enumeration of the case;
///   parabolic        enumeration over the half decompositions listed per
///                    case (rows on unlisted decompositions are noted);
///   hyperbolic       per listed decomposition, exactly one row;
///   other            every listed row is satisfiable with its P(w1).
TableReport table_report(const ReferenceTable& table);

/// Half decompositions appearing in a list of rows, deduplicated.
std::vector<std::array<SurfaceUnion, 2>> listed_half_splits(const std::vector<ClassificationRow>& rows);

}  // namespace pvform
