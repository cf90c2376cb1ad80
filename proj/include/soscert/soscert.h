/*
 * C interface to the soscert library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Every call that can fail returns a
 * soscert_status; on failure a message is available from
 * soscert_last_error() (thread-local, valid until the next call on the same
 * thread).
 *
 * Outcome statuses double as CLI exit codes: OK (definite verdicts),
 * IDENTITY_FAILURE, PARSE_ERROR, INCONCLUSIVE (stage 1 did not pin the
 * summands), BUDGET_EXHAUSTED (a Groebner run hit its budget). Reports are
 * still produced for IDENTITY_FAILURE, INCONCLUSIVE and BUDGET_EXHAUSTED.
 */
#ifndef SOSCERT_H
#define SOSCERT_H

#include <stddef.h>

#if defined(SOSCERT_BUILDING_LIBRARY)
#define SOSCERT_API __attribute__((visibility("default")))
#else
#define SOSCERT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct soscert_instance soscert_instance;
typedef struct soscert_report soscert_report;

typedef enum soscert_status {
  SOSCERT_OK = 0,
  SOSCERT_IDENTITY_FAILURE = 1,
  SOSCERT_PARSE_ERROR = 2,
  SOSCERT_INCONCLUSIVE = 3,
  SOSCERT_BUDGET_EXHAUSTED = 4,
  SOSCERT_INVALID_ARGUMENT = 64,
  SOSCERT_INTERNAL_ERROR = 70
} soscert_status;

typedef enum soscert_order {
  SOSCERT_ORDER_DEGREVLEX = 0,
  SOSCERT_ORDER_LEX = 1,
  SOSCERT_ORDER_DEGLEX = 2
} soscert_order;

typedef struct soscert_options {
  /* Square counts to decide, inclusive. t_min = 0 selects s-1 and s. */
  unsigned t_min;
  unsigned t_max;
  soscert_order order;
  unsigned long long max_pairs;
  unsigned long long max_coeff_bits;
  /* Nonzero adds wall-clock timings to rendered reports. */
  int include_timings;
} soscert_options;

SOSCERT_API const char* soscert_version(void);
SOSCERT_API const char* soscert_last_error(void);
SOSCERT_API const char* soscert_status_name(soscert_status status);

SOSCERT_API void soscert_options_init(soscert_options* options);

/* Parses instance-file text. `name` may be NULL. */
SOSCERT_API soscert_status soscert_instance_parse(const char* text, const char* name,
                                                  soscert_instance** out);
/* "example-2.1" or "example-2.2". */
SOSCERT_API soscert_status soscert_instance_builtin(const char* name, soscert_instance** out);
/* 2(n-1)-generator family instance; only n = 5 has a built-in seed. */
SOSCERT_API soscert_status soscert_instance_family(unsigned n, soscert_instance** out);
SOSCERT_API void soscert_instance_free(soscert_instance* instance);

SOSCERT_API size_t soscert_instance_variables(const soscert_instance* instance);
SOSCERT_API size_t soscert_instance_generators(const soscert_instance* instance);
/* Instance-file text of the instance; owned by the handle. */
SOSCERT_API const char* soscert_instance_text(const soscert_instance* instance);

SOSCERT_API soscert_status soscert_verify(const soscert_instance* instance,
                                          const soscert_options* options, soscert_report** out);
SOSCERT_API soscert_status soscert_dual(const soscert_instance* instance,
                                        const soscert_options* options, soscert_report** out);
SOSCERT_API soscert_status soscert_certify(const soscert_instance* instance,
                                           const soscert_options* options, soscert_report** out);

/* Rendered report; owned by the handle. */
SOSCERT_API const char* soscert_report_text(const soscert_report* report);
SOSCERT_API const char* soscert_report_json(const soscert_report* report);
SOSCERT_API soscert_status soscert_report_status(const soscert_report* report);
SOSCERT_API void soscert_report_free(soscert_report* report);

#ifdef __cplusplus
}
#endif

#endif /* SOSCERT_H */
