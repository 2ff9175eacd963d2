// SPDX-License-Identifier: Apache-2.0
#include "pvform/pvform.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "acceptance.hpp"
#include "pvform/enriques.hpp"
#include "pvform/error.hpp"
#include "pvform/fundcycle.hpp"
#include "pvform/lattice.hpp"
#include "pvform/quadspace.hpp"
#include "pvform/surface.hpp"
#include "pvform/tables.hpp"

struct pvf_space {
  pvform::QuadraticSpace value;
};
struct pvf_lattice {
  pvform::UnimodularLattice value;
};
struct pvf_rows {
  pvform::SurfaceUnion components;
  std::optional<std::array<pvform::SurfaceUnion, 2>> halves;
  std::vector<pvform::ClassificationRow> rows;
  std::vector<std::string> rendered;
};
struct pvf_arrangement {
  pvform::CurveArrangement value;
};
struct pvf_report {
  std::string text;
  bool ok = false;
};

namespace {

thread_local std::string last_error;

pvf_status code_of(pvform::Errc e) {
  switch (e) {
    case pvform::Errc::dimension_mismatch: return PVF_ERR_DIMENSION;
    case pvform::Errc::parse_error: return PVF_ERR_PARSE;
    case pvform::Errc::precondition: return PVF_ERR_PRECONDITION;
    case pvform::Errc::not_informative: return PVF_ERR_NOT_INFORMATIVE;
    case pvform::Errc::guard_exceeded: return PVF_ERR_GUARD;
    case pvform::Errc::io_error: return PVF_ERR_IO;
    case pvform::Errc::not_found: return PVF_ERR_NOT_FOUND;
  }
  return PVF_ERR_INTERNAL;
}

pvf_status set_error(pvf_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
pvf_status guarded(F body) {
  try {
    last_error.clear();
    return body();
  } catch (const pvform::Error& e) {
    return set_error(code_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(PVF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(PVF_ERR_INTERNAL, e.what());
  }
}

#define PVF_REQUIRE(cond, what) \
  if (!(cond)) return set_error(PVF_ERR_INVALID_ARGUMENT, what)

std::string data_dir_or_default(const char* dir) { return dir ? std::string(dir) : std::string(pvf_default_data_dir()); }

pvf_status emit(pvf_report** out, std::string text, bool ok) {
  *out = new pvf_report{std::move(text), ok};
  return ok ? PVF_OK : PVF_MISMATCH;
}

}  // namespace

extern "C" {

const char* pvf_last_error(void) { return last_error.c_str(); }

const char* pvf_version(void) { return "0.1.0"; }

const char* pvf_status_name(pvf_status status) {
  switch (status) {
    case PVF_OK: return "ok";
    case PVF_MISMATCH: return "mismatch";
    case PVF_ERR_PARSE: return "parse error";
    case PVF_ERR_PRECONDITION: return "precondition";
    case PVF_ERR_NOT_FOUND: return "not found";
    case PVF_ERR_DIMENSION: return "dimension mismatch";
    case PVF_ERR_NOT_INFORMATIVE: return "not informative";
    case PVF_ERR_GUARD: return "size guard exceeded";
    case PVF_ERR_IO: return "i/o error";
    case PVF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PVF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pvf_default_data_dir(void) {
  if (const char* env = std::getenv("PVFORM_DATA_DIR"); env && *env) return env;
  return PVFORM_DEFAULT_DATA_DIR;
}

const char* pvf_report_text(const pvf_report* report) { return report ? report->text.c_str() : ""; }
int pvf_report_ok(const pvf_report* report) { return report && report->ok ? 1 : 0; }
void pvf_report_free(pvf_report* report) { delete report; }

pvf_status pvf_space_parse(const char* text, pvf_space** out) {
  PVF_REQUIRE(text && out, "pvf_space_parse: null argument");
  return guarded([&] {
    *out = new pvf_space{pvform::parse_quadratic_space(text)};
    return PVF_OK;
  });
}

void pvf_space_free(pvf_space* space) { delete space; }

pvf_status pvf_space_dim(const pvf_space* space, size_t* out) {
  PVF_REQUIRE(space && out, "pvf_space_dim: null argument");
  *out = space->value.dim();
  return PVF_OK;
}

pvf_status pvf_space_brown(const pvf_space* space, int* out) {
  PVF_REQUIRE(space && out, "pvf_space_brown: null argument");
  return guarded([&] {
    const auto b = pvform::brown(space->value);
    *out = b.defined() ? b.residue() : -1;
    return PVF_OK;
  });
}

pvf_status pvf_space_brown_decomposition(const pvf_space* space, int* out) {
  PVF_REQUIRE(space && out, "pvf_space_brown_decomposition: null argument");
  return guarded([&] {
    const auto b = pvform::brown_by_decomposition(space->value);
    *out = b.defined() ? b.residue() : -1;
    return PVF_OK;
  });
}

pvf_status pvf_space_report(const pvf_space* space, pvf_report** out) {
  PVF_REQUIRE(space && out, "pvf_space_report: null argument");
  return guarded([&] {
    const auto& s = space->value;
    std::ostringstream os;
    const auto g = pvform::gauss_sum_profile(s);
    const auto info = pvform::radical_and_informative(s);
    const auto b = pvform::brown(s);
    const auto d = pvform::brown_by_decomposition(s);
    os << "dim: " << s.dim() << '\n';
    os << "q counts (0,1,2,3): " << g.counts[0] << ' ' << g.counts[1] << ' ' << g.counts[2] << ' ' << g.counts[3]
       << '\n';
    os << "gauss sum: " << g.real_part() << (g.imag_part() < 0 ? " - " : " + ") << std::abs(g.imag_part()) << "i\n";
    os << "radical dim: " << info.radical_basis.size() << (info.informative ? " (informative)" : " (not informative)")
       << '\n';
    os << "brown: " << b.to_string() << '\n';
    os << "brown (decomposition): " << d.to_string() << '\n';
    os << "characteristic elements:";
    for (const auto& u : pvform::characteristic_elements(s)) os << ' ' << u.to_string();
    os << '\n';
    if (info.informative) {
      const auto w = pvform::null_cobordant_witness(s);
      os << "null-cobordant witness:";
      if (!w) {
        os << " none";
      } else {
        for (const auto& v : *w) os << ' ' << v.to_string();
        if (w->empty()) os << " {0}";
      }
      os << '\n';
    }
    return emit(out, os.str(), true);
  });
}

pvf_status pvf_lattice_parse(const char* text, pvf_lattice** out) {
  PVF_REQUIRE(text && out, "pvf_lattice_parse: null argument");
  return guarded([&] {
    *out = new pvf_lattice{pvform::parse_lattice(text)};
    return PVF_OK;
  });
}

void pvf_lattice_free(pvf_lattice* lattice) { delete lattice; }

pvf_status pvf_lattice_rank(const pvf_lattice* lattice, size_t* out) {
  PVF_REQUIRE(lattice && out, "pvf_lattice_rank: null argument");
  *out = lattice->value.rank();
  return PVF_OK;
}

pvf_status pvf_lattice_check(const pvf_lattice* lattice, int* signature, int* brown, int* equal) {
  PVF_REQUIRE(lattice, "pvf_lattice_check: null lattice");
  return guarded([&] {
    const auto c = pvform::brown_signature_check(lattice->value);
    if (signature) *signature = pvform::signature(lattice->value);
    if (brown) *brown = c.brown.defined() ? c.brown.residue() : -1;
    if (equal) *equal = c.equal ? 1 : 0;
    return PVF_OK;
  });
}

pvf_status pvf_components_info(const char* components, int* chi, int* chi_divisible_by_8, int* m_surface) {
  PVF_REQUIRE(components, "pvf_components_info: null components");
  return guarded([&] {
    const auto u = pvform::parse_components(components);
    if (chi) *chi = pvform::euler_char(u);
    if (chi_divisible_by_8) *chi_divisible_by_8 = pvform::chi_congruence(u) ? 1 : 0;
    if (m_surface) *m_surface = pvform::m_surface_check(u) ? 1 : 0;
    return PVF_OK;
  });
}

pvf_status pvf_enumerate(const char* components, const char* half1, const char* half2, pvf_rows** out) {
  PVF_REQUIRE(components && out, "pvf_enumerate: null argument");
  PVF_REQUIRE((half1 == nullptr) == (half2 == nullptr), "pvf_enumerate: give both halves or neither");
  return guarded([&] {
    auto rows = std::make_unique<pvf_rows>();
    rows->components = pvform::parse_components(components);
    pvform::EnumerateOptions opt;
    if (half1) opt.halves = std::array{pvform::parse_components(half1), pvform::parse_components(half2)};
    rows->halves = opt.halves;
    rows->rows = pvform::enumerate_separations(rows->components, opt);
    for (const auto& r : rows->rows) rows->rendered.push_back(r.to_string());
    *out = rows.release();
    return PVF_OK;
  });
}

size_t pvf_rows_count(const pvf_rows* rows) { return rows ? rows->rows.size() : 0; }

const char* pvf_rows_get(const pvf_rows* rows, size_t index) {
  if (!rows || index >= rows->rendered.size()) return nullptr;
  return rows->rendered[index].c_str();
}

void pvf_rows_free(pvf_rows* rows) { delete rows; }

pvf_status pvf_rows_diff(const pvf_rows* rows, const char* label, const char* data_dir, pvf_report** out) {
  PVF_REQUIRE(rows && label && out, "pvf_rows_diff: null argument");
  return guarded([&] {
    const auto table = pvform::load_reference_table(label, data_dir_or_default(data_dir));
    std::vector<pvform::ClassificationRow> reference;
    for (const auto& r : table.all_rows()) {
      if (r.partition.components() != rows->components) continue;
      if (rows->halves) {
        const auto c = r.partition.canonical();
        const auto& h = *rows->halves;
        const bool same = (c.half(0) == h[0] && c.half(1) == h[1]) || (c.half(0) == h[1] && c.half(1) == h[0]);
        if (!same) continue;
      }
      reference.push_back(r);
    }
    if (reference.empty())
      pvform::fail(pvform::Errc::not_found,
                   "table '" + std::string(label) + "' lists no rows for " + rows->components.to_string());
    const auto d = pvform::diff_rows(rows->rows, reference);
    std::ostringstream os;
    for (const auto& m : d.missing) os << "missing: " << m << '\n';
    for (const auto& e : d.extra) os << "extra:   " << e << '\n';
    os << d.matched << "/" << d.expected << " rows match";
    if (!d.extra.empty()) os << ", " << d.extra.size() << " extra";
    os << '\n';
    return emit(out, os.str(), d.equal());
  });
}

pvf_status pvf_partition_check(const char* partition, int* satisfiable, char* pw1, size_t pw1_size) {
  PVF_REQUIRE(partition && satisfiable, "pvf_partition_check: null argument");
  return guarded([&] {
    const auto p = pvform::parse_partition(partition);
    const bool sat = pvform::ergm_satisfiable(p).has_value();
    *satisfiable = sat ? 1 : 0;
    if (pw1 && pw1_size) {
      const std::string v = sat ? pvform::pw1_set(p).to_string() : std::string{};
      std::strncpy(pw1, v.c_str(), pw1_size - 1);
      pw1[pw1_size - 1] = '\0';
    }
    return PVF_OK;
  });
}

pvf_status pvf_table_report(const char* label, const char* data_dir, pvf_report** out) {
  PVF_REQUIRE(label && out, "pvf_table_report: null argument");
  return guarded([&] {
    const auto table = pvform::load_reference_table(label, data_dir_or_default(data_dir));
    const auto r = pvform::table_report(table);
    return emit(out, r.text, r.match);
  });
}

pvf_status pvf_arrangement_parse(const char* text, pvf_arrangement** out) {
  PVF_REQUIRE(text && out, "pvf_arrangement_parse: null argument");
  return guarded([&] {
    *out = new pvf_arrangement{pvform::parse_arrangement(text)};
    return PVF_OK;
  });
}

void pvf_arrangement_free(pvf_arrangement* arr) { delete arr; }

pvf_status pvf_arrangement_solvable(const pvf_arrangement* arr, int* out) {
  PVF_REQUIRE(arr && out, "pvf_arrangement_solvable: null argument");
  return guarded([&] {
    *out = pvform::solve_fundamental_cycle(arr->value).has_value() ? 1 : 0;
    return PVF_OK;
  });
}

pvf_status pvf_fundcycle_report(const pvf_arrangement* arr, int assume_proper, pvf_report** out) {
  PVF_REQUIRE(arr && out, "pvf_fundcycle_report: null argument");
  return guarded([&] { return emit(out, pvform::fundcycle_report(arr->value, assume_proper != 0), true); });
}

pvf_status pvf_selfcheck(const char* data_dir, int criterion, pvf_report** out) {
  PVF_REQUIRE(out, "pvf_selfcheck: null argument");
  PVF_REQUIRE(criterion >= 0 && criterion <= pvform::selfcheck::kCriterionCount, "pvf_selfcheck: no such criterion");
  return guarded([&] {
    namespace sc = pvform::selfcheck;
    const std::string dir = data_dir_or_default(data_dir);
    std::vector<sc::CriterionResult> results;
    if (criterion)
      results.push_back(sc::run_criterion(criterion, dir));
    else
      results = sc::run_all(dir);
    std::ostringstream os;
    bool failed = false, missing = false;
    double total = 0;
    for (const auto& r : results) {
      os << sc::format_result(r) << '\n';
      failed = failed || r.outcome == sc::Outcome::fail;
      missing = missing || r.outcome == sc::Outcome::missing_reference;
      total += r.seconds;
    }
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.outcome == sc::Outcome::pass;
    char tail[96];
    std::snprintf(tail, sizeof tail, "%zu/%zu criteria passed in %.2f s\n", passed, results.size(), total);
    os << tail;
    *out = new pvf_report{os.str(), !failed && !missing};
    if (missing) {
      last_error = "a reference table is missing";
      return PVF_ERR_NOT_FOUND;
    }
    return failed ? PVF_MISMATCH : PVF_OK;
  });
}

}  // extern "C"
