/* Copyright 2026 The toricglue Authors
 * SPDX-License-Identifier: Apache-2.0
 */

/* C interface to the toricglue library. Documents and reports are opaque
 * handles; every report is a JSON string owned by its handle. */

#ifndef TORIC_TORIC_H_
#define TORIC_TORIC_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TORIC_API __declspec(dllexport)
#else
#define TORIC_API __attribute__((visibility("default")))
#endif

typedef enum toric_status {
  TORIC_OK = 0,
  TORIC_VIOLATION = 1,        /* domain violation; the report says which */
  TORIC_MALFORMED = 2,        /* bad JSON, schema mismatch, bad arguments */
  TORIC_INTERNAL = 3,
  TORIC_INVALID_ARGUMENT = 4  /* null handle or pointer */
} toric_status;

typedef struct toric_document toric_document;
typedef struct toric_report toric_report;

/* Parses a JSON document. `base_dir` resolves relative file references and
 * may be NULL. On failure *out is NULL and a report may still be produced
 * through toric_last_error(). */
TORIC_API toric_status toric_document_parse(const char* text, size_t length,
                                            const char* base_dir,
                                            toric_document** out);
TORIC_API const char* toric_document_kind(const toric_document* doc);
TORIC_API void toric_document_free(toric_document* doc);

/* Each command stores its report in *out, also on failure statuses. */
TORIC_API toric_status toric_validate(const toric_document* doc,
                                      toric_report** out);
TORIC_API toric_status toric_colimit(const toric_document* doc,
                                     toric_report** out);
TORIC_API toric_status toric_extend(const toric_document* doc,
                                    toric_report** out);
TORIC_API toric_status toric_glue(const toric_document* doc,
                                  toric_report** out);
/* which: "smooth", "cohaffine", "group" or "canonical". */
TORIC_API toric_status toric_check(const toric_document* doc,
                                   const char* which, toric_report** out);

/* Compact JSON with sorted keys and a trailing newline. */
TORIC_API const char* toric_report_json(const toric_report* report);
TORIC_API void toric_report_free(toric_report* report);

/* Message of the last failure on this thread, or "". */
TORIC_API const char* toric_last_error(void);
TORIC_API const char* toric_version(void);

#ifdef __cplusplus
}
#endif

#endif /* TORIC_TORIC_H_ */
