// SPDX-License-Identifier: Apache-2.0
// Command-line front end. Talks to the engine through the C API only.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "pvform/pvform.h"

namespace {

enum Exit : int { kOk = 0, kMismatch = 1, kUsage = 2, kPrecondition = 3, kMissingReference = 4, kInternal = 5 };

int exit_for(pvf_status s) {
  switch (s) {
    case PVF_OK: return kOk;
    case PVF_MISMATCH: return kMismatch;
    case PVF_ERR_PARSE:
    case PVF_ERR_INVALID_ARGUMENT:
    case PVF_ERR_IO: return kUsage;
    case PVF_ERR_NOT_FOUND: return kMissingReference;
    case PVF_ERR_PRECONDITION:
    case PVF_ERR_DIMENSION:
    case PVF_ERR_NOT_INFORMATIVE:
    case PVF_ERR_GUARD: return kPrecondition;
    case PVF_ERR_INTERNAL: return kInternal;
  }
  return kInternal;
}

int report_error(pvf_status s) {
  std::cerr << "pvform: " << pvf_status_name(s) << ": " << pvf_last_error() << '\n';
  return exit_for(s);
}

// Owns a report handle and prints it.
struct Report {
  pvf_report* handle = nullptr;
  ~Report() { pvf_report_free(handle); }
  void print() const { std::cout << pvf_report_text(handle); }
};

std::optional<std::string> read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream f(path);
  if (!f) return std::nullopt;
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

const char* dir_or_null(const std::string& dir) { return dir.empty() ? nullptr : dir.c_str(); }

int run_brown(const std::string& path) {
  const auto text = read_input(path);
  if (!text) {
    std::cerr << "pvform: cannot read " << path << '\n';
    return kUsage;
  }
  pvf_space* space = nullptr;
  if (auto s = pvf_space_parse(text->c_str(), &space); s != PVF_OK) return report_error(s);
  Report r;
  const auto s = pvf_space_report(space, &r.handle);
  pvf_space_free(space);
  if (s != PVF_OK) return report_error(s);
  r.print();
  return kOk;
}

int run_lattice_check(const std::string& lattice_text, const std::string& path) {
  std::string text = lattice_text;
  if (!path.empty()) {
    const auto t = read_input(path);
    if (!t) {
      std::cerr << "pvform: cannot read " << path << '\n';
      return kUsage;
    }
    text = *t;
  }
  if (text.empty()) {
    std::cerr << "pvform: lattice-check needs a lattice or --file\n";
    return kUsage;
  }
  pvf_lattice* lattice = nullptr;
  if (auto s = pvf_lattice_parse(text.c_str(), &lattice); s != PVF_OK) return report_error(s);
  std::size_t rank = 0;
  int sig = 0, brown = 0, equal = 0;
  pvf_lattice_rank(lattice, &rank);
  const auto s = pvf_lattice_check(lattice, &sig, &brown, &equal);
  pvf_lattice_free(lattice);
  if (s != PVF_OK) return report_error(s);
  std::cout << "rank: " << rank << "\nsignature: " << sig << " (mod 8: " << ((sig % 8) + 8) % 8 << ")\n"
            << "brown of reduction: " << (brown < 0 ? std::string("undefined") : std::to_string(brown)) << '\n'
            << "brown = signature mod 8: " << (equal ? "yes" : "no") << '\n';
  return equal ? kOk : kMismatch;
}

int run_enumerate(const std::string& components, const std::string& halves, const std::string& reference,
                  const std::string& data_dir) {
  int chi = 0, divisible = 0, msurf = 0;
  if (auto s = pvf_components_info(components.c_str(), &chi, &divisible, &msurf); s != PVF_OK)
    return report_error(s);
  std::string h1, h2;
  if (!halves.empty()) {
    const auto bar = halves.find('|');
    if (bar == std::string::npos) {
      std::cerr << "pvform: --halves reads '<first half>|<second half>'\n";
      return kUsage;
    }
    h1 = halves.substr(0, bar);
    h2 = halves.substr(bar + 1);
  }
  pvf_rows* rows = nullptr;
  const auto s = pvf_enumerate(components.c_str(), halves.empty() ? nullptr : h1.c_str(),
                               halves.empty() ? nullptr : h2.c_str(), &rows);
  if (s != PVF_OK) {
    if (s == PVF_ERR_PRECONDITION && !divisible)
      std::cerr << "pvform: the Euler characteristic of the real part must be divisible by 8\n";
    return report_error(s);
  }
  std::cout << "components: " << components << "  chi=" << chi << (msurf ? "  (M-surface)" : "") << '\n';
  const std::size_t n = pvf_rows_count(rows);
  for (std::size_t i = 0; i < n; ++i) std::cout << pvf_rows_get(rows, i) << '\n';
  std::cout << n << " rows\n";
  int code = kOk;
  if (!reference.empty()) {
    Report r;
    const auto d = pvf_rows_diff(rows, reference.c_str(), dir_or_null(data_dir), &r.handle);
    if (d == PVF_OK || d == PVF_MISMATCH) {
      r.print();
      code = exit_for(d);
    } else {
      code = report_error(d);
    }
  }
  pvf_rows_free(rows);
  return code;
}

int run_tables(const std::string& label, const std::string& data_dir) {
  const char* labels[] = {"elliptic-4V1-2S", "parabolic", "hyperbolic", "other"};
  if (!label.empty() && std::none_of(std::begin(labels), std::end(labels), [&](const char* l) { return label == l; })) {
    std::cerr << "pvform: unknown table '" << label << "'\n";
    return kUsage;
  }
  int code = kOk;
  for (const char* l : labels) {
    if (!label.empty() && label != l) continue;
    Report r;
    const auto s = pvf_table_report(l, dir_or_null(data_dir), &r.handle);
    if (s == PVF_OK || s == PVF_MISMATCH) {
      r.print();
      if (s == PVF_MISMATCH && code == kOk) code = kMismatch;
    } else {
      const int e = report_error(s);
      if (code == kOk || e == kMissingReference) code = e;
    }
  }
  return code;
}

int run_fundcycle(const std::string& path, bool assume_proper) {
  const auto text = read_input(path);
  if (!text) {
    std::cerr << "pvform: cannot read " << path << '\n';
    return kUsage;
  }
  pvf_arrangement* arr = nullptr;
  if (auto s = pvf_arrangement_parse(text->c_str(), &arr); s != PVF_OK) return report_error(s);
  Report r;
  const auto s = pvf_fundcycle_report(arr, assume_proper ? 1 : 0, &r.handle);
  pvf_arrangement_free(arr);
  if (s != PVF_OK) return report_error(s);
  r.print();
  return kOk;
}

int run_selfcheck(int criterion, const std::string& data_dir) {
  bool failed = false, missing = false;
  const int first = criterion ? criterion : 1, last = criterion ? criterion : 10;
  std::cout << "data: " << (data_dir.empty() ? pvf_default_data_dir() : data_dir) << '\n';
  for (int id = first; id <= last; ++id) {
    Report r;
    const auto s = pvf_selfcheck(dir_or_null(data_dir), id, &r.handle);
    if (!r.handle) return report_error(s);
    // Drop the per-run summary; one is printed at the end.
    std::string text = pvf_report_text(r.handle);
    const auto cut = text.rfind('\n', text.size() >= 2 ? text.size() - 2 : 0);
    text.erase(cut == std::string::npos ? 0 : cut + 1);
    std::cout << text << std::flush;
    failed = failed || s == PVF_MISMATCH;
    missing = missing || s == PVF_ERR_NOT_FOUND;
  }
  std::cout << (failed || missing ? "selfcheck FAILED\n" : "selfcheck passed\n");
  if (missing) return kMissingReference;
  return failed ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic forms over GF(2), Brown invariants and real Enriques surface separations"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(pvf_version()));

  std::string file, lattice_text, components, halves, reference, label, data_dir;
  bool assume_proper = false;
  int criterion = 0;

  auto* brown = app.add_subcommand("brown", "Brown invariant and structure of a quadratic space");
  brown->add_option("--file", file, "Space in text form ('-' or omitted: stdin)");

  auto* lattice = app.add_subcommand("lattice-check", "Compare Brown of L/2L with the signature of L");
  lattice->add_option("lattice", lattice_text, "E8, U, +1, -1 or sum:E8,2*U,...");
  lattice->add_option("--file", file, "Gram matrix file: 'rank n' then n*n integers");

  auto* enumerate = app.add_subcommand("enumerate", "Satisfiable complex separations of a real part");
  enumerate->add_option("--components", components, "Real part, e.g. 4V1+2S")->required();
  enumerate->add_option("--halves", halves, "Restrict to one half decomposition, e.g. 'V2+2S|2S'");
  enumerate->add_option("--reference", reference, "Diff against a bundled table");
  enumerate->add_option("--data-dir", data_dir, "Reference table directory");

  auto* tables = app.add_subcommand("tables", "Reproduce the bundled reference tables");
  tables->add_option("--label", label, "elliptic-4V1-2S, parabolic, hyperbolic or other");
  tables->add_option("--data-dir", data_dir, "Reference table directory");

  auto* fundcycle = app.add_subcommand("fundcycle", "Fundamental cycle of a curve arrangement");
  fundcycle->add_option("--file", file, "Arrangement file ('-' or omitted: stdin)");
  fundcycle->add_flag("--assume-proper", assume_proper, "Treat the cycle as proper (M-surface, connected real part)");

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the acceptance suite");
  selfcheck->add_option("--criterion", criterion, "Run one criterion (1-10)")->check(CLI::Range(1, 10));
  selfcheck->add_option("--data-dir", data_dir, "Reference table directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*brown) return run_brown(file);
  if (*lattice) return run_lattice_check(lattice_text, file);
  if (*enumerate) return run_enumerate(components, halves, reference, data_dir);
  if (*tables) return run_tables(label, data_dir);
  if (*fundcycle) return run_fundcycle(file, assume_proper);
  if (*selfcheck) return run_selfcheck(criterion, data_dir);
  return kUsage;
}
