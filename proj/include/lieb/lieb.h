#ifndef LIEB_LIEB_H
#define LIEB_LIEB_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(LIEB_BUILDING)
#    define LIEB_API __declspec(dllexport)
#  else
#    define LIEB_API __declspec(dllimport)
#  endif
#else
#  define LIEB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lieb_status {
  LIEB_OK = 0,
  LIEB_E_CONFIG = 1,   /* unknown subcommand/option or invalid value */
  LIEB_E_NUMERIC = 2,  /* quadrature or solver failure */
  LIEB_E_IO = 3,
  LIEB_E_ARGUMENT = 4, /* null handle or pointer */
  LIEB_E_INTERNAL = 5
} lieb_status;

typedef enum lieb_verdict {
  LIEB_VERIFIED = 0,
  LIEB_REFUTED = 1,
  LIEB_INCONCLUSIVE = 2,
  LIEB_NOT_APPLICABLE = 3,
  LIEB_CONVERGENT = 4,
  LIEB_DIVERGED = 5
} lieb_verdict;

typedef struct lieb_request lieb_request;
typedef struct lieb_report lieb_report;

/* Message of the last failed call on this thread; empty when none. */
LIEB_API const char* lieb_last_error(void);
LIEB_API const char* lieb_status_name(lieb_status status);
LIEB_API const char* lieb_verdict_name(lieb_verdict verdict);
LIEB_API const char* lieb_version(void);

LIEB_API lieb_status lieb_constant_C(int n, double lambda, double* out);
LIEB_API lieb_status lieb_constant_L(int n, double lambda, double rel_tol, double* out);
LIEB_API lieb_status lieb_critical_exponent(int n, double lambda, double* out);

/* Subcommand names: constants, verify-solution, riesz, identity, corollary,
   regularity, scan, solve. */
LIEB_API lieb_status lieb_request_create(const char* subcommand, lieb_request** out);
LIEB_API lieb_status lieb_request_set(lieb_request* req, const char* key, const char* value);
/* key = value lines, '#' comments. Explicit lieb_request_set values win. */
LIEB_API lieb_status lieb_request_merge_config_file(lieb_request* req, const char* path);
LIEB_API void lieb_request_destroy(lieb_request* req);

LIEB_API lieb_status lieb_run(const lieb_request* req, lieb_report** out);

/* Borrowed; valid until the report is destroyed. */
LIEB_API const char* lieb_report_json(const lieb_report* rep);
LIEB_API lieb_verdict lieb_report_verdict(const lieb_report* rep);
/* 0 all verified/convergent, 1 any refuted/diverged/inconclusive, 3 only not applicable. */
LIEB_API int lieb_report_exit_code(const lieb_report* rep);
LIEB_API size_t lieb_report_result_count(const lieb_report* rep);
LIEB_API lieb_status lieb_report_result_verdict(const lieb_report* rep, size_t index, lieb_verdict* out);
LIEB_API lieb_status lieb_report_from_json(const char* json, lieb_report** out);
LIEB_API void lieb_report_destroy(lieb_report* rep);

#ifdef __cplusplus
}
#endif

#endif
