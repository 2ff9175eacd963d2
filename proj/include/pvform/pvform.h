/* SPDX-License-Identifier: Apache-2.0 */
#ifndef PVFORM_PVFORM_H
#define PVFORM_PVFORM_H

#include <stddef.h>

#if defined(PVFORM_BUILDING_LIBRARY)
#define PVF_API __attribute__((visibility("default")))
#else
#define PVF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pvf_status {
  PVF_OK = 0,
  PVF_MISMATCH = 1,
  PVF_ERR_PARSE = 2,
  PVF_ERR_PRECONDITION = 3,
  PVF_ERR_NOT_FOUND = 4,
  PVF_ERR_DIMENSION = 5,
  PVF_ERR_NOT_INFORMATIVE = 6,
  PVF_ERR_GUARD = 7,
  PVF_ERR_IO = 8,
  PVF_ERR_INVALID_ARGUMENT = 9,
  PVF_ERR_INTERNAL = 10
} pvf_status;

typedef struct pvf_space pvf_space;
typedef struct pvf_lattice pvf_lattice;
typedef struct pvf_rows pvf_rows;
typedef struct pvf_arrangement pvf_arrangement;
typedef struct pvf_report pvf_report;

/* Message of the last failing call on this thread; "" after a success. */
PVF_API const char* pvf_last_error(void);
PVF_API const char* pvf_version(void);
PVF_API const char* pvf_status_name(pvf_status status);

/* $PVFORM_DATA_DIR when set, otherwise the directory compiled in. */
PVF_API const char* pvf_default_data_dir(void);

/* Reports: free-form text plus an ok flag. A call that returns PVF_OK or
   PVF_MISMATCH (and pvf_selfcheck on PVF_ERR_NOT_FOUND) stores one in *out;
   release it with pvf_report_free. */
PVF_API const char* pvf_report_text(const pvf_report* report);
PVF_API int pvf_report_ok(const pvf_report* report);
PVF_API void pvf_report_free(pvf_report* report);

/* Quadratic spaces in the text form "dim n", n rows of 0/1, n residues. */
PVF_API pvf_status pvf_space_parse(const char* text, pvf_space** out);
PVF_API void pvf_space_free(pvf_space* space);
PVF_API pvf_status pvf_space_dim(const pvf_space* space, size_t* out);
/* Brown invariant mod 8, or -1 when the space is not informative. */
PVF_API pvf_status pvf_space_brown(const pvf_space* space, int* out);
PVF_API pvf_status pvf_space_brown_decomposition(const pvf_space* space, int* out);
/* Gauss sum, both Brown paths, radical, characteristic elements, witness. */
PVF_API pvf_status pvf_space_report(const pvf_space* space, pvf_report** out);

/* Lattices: "rank n" plus entries, or E8, U, +1, -1, or "sum:E8,2*U,-1". */
PVF_API pvf_status pvf_lattice_parse(const char* text, pvf_lattice** out);
PVF_API void pvf_lattice_free(pvf_lattice* lattice);
PVF_API pvf_status pvf_lattice_rank(const pvf_lattice* lattice, size_t* out);
/* signature, Brown of the mod-2 reduction (-1 if undefined) and whether
   Brown equals the signature mod 8. Any output pointer may be NULL. */
PVF_API pvf_status pvf_lattice_check(const pvf_lattice* lattice, int* signature, int* brown, int* equal);

/* Euler characteristic and the congruence / M-surface flags of a component
   string such as "4V1+2S". Any output pointer may be NULL. */
PVF_API pvf_status pvf_components_info(const char* components, int* chi, int* chi_divisible_by_8,
                                       int* m_surface);

/* Canonical separation rows. `half1`/`half2` restrict the enumeration to one
   half decomposition; pass NULL for both to enumerate every one. */
PVF_API pvf_status pvf_enumerate(const char* components, const char* half1, const char* half2, pvf_rows** out);
PVF_API size_t pvf_rows_count(const pvf_rows* rows);
/* Rendered row, valid until pvf_rows_free; NULL when out of range. */
PVF_API const char* pvf_rows_get(const pvf_rows* rows, size_t index);
PVF_API void pvf_rows_free(pvf_rows* rows);

/* Diffs rows against the rows of table `label` on the same components (and
   the same half decomposition when the enumeration was restricted).
   Returns PVF_MISMATCH with the report when they differ. `data_dir` may be
   NULL for the default. */
PVF_API pvf_status pvf_rows_diff(const pvf_rows* rows, const char* label, const char* data_dir, pvf_report** out);

/* E-RGM satisfiability and P(w1) of one row's partition. */
PVF_API pvf_status pvf_partition_check(const char* partition, int* satisfiable, char* pw1, size_t pw1_size);

/* Reproduces one bundled table; PVF_MISMATCH when it does not match. */
PVF_API pvf_status pvf_table_report(const char* label, const char* data_dir, pvf_report** out);

PVF_API pvf_status pvf_arrangement_parse(const char* text, pvf_arrangement** out);
PVF_API void pvf_arrangement_free(pvf_arrangement* arr);
/* 1 when a fundamental cycle exists. */
PVF_API pvf_status pvf_arrangement_solvable(const pvf_arrangement* arr, int* out);
PVF_API pvf_status pvf_fundcycle_report(const pvf_arrangement* arr, int assume_proper, pvf_report** out);

/* Runs the acceptance suite (criteria 1..10, or only `criterion` when it is
   nonzero). PVF_MISMATCH on a failed criterion, PVF_ERR_NOT_FOUND when a
   reference table is missing. */
PVF_API pvf_status pvf_selfcheck(const char* data_dir, int criterion, pvf_report** out);

#ifdef __cplusplus
}
#endif

#endif /* PVFORM_PVFORM_H */
