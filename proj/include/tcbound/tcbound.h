/* C interface to the tcbound core. Every function returns a tcb_status; on
 * failure tcb_last_error() describes the problem (per thread). Strings handed
 * out through char** must be released with tcb_string_free. */
#ifndef TCBOUND_H
#define TCBOUND_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TCB_API __declspec(dllexport)
#else
#define TCB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tcb_status {
    TCB_OK = 0,
    TCB_INVALID_ARGUMENT = 1,
    TCB_SCHEMA = 2,
    TCB_INCONSISTENT = 3,
    TCB_RESOURCE = 4,
    TCB_UNSUPPORTED = 5,
    TCB_CHECK_FAILED = 6,
    TCB_INTERNAL = 7
} tcb_status;

typedef struct tcb_descriptor tcb_descriptor;
typedef struct tcb_report tcb_report;

typedef struct tcb_options {
    unsigned max_depth; /* 0 selects 2 dim */
    int exhaustive;
    int reduced;        /* report reduced TC (one less than the normalized value) */
} tcb_options;

typedef enum tcb_direction { TCB_LOWER = 0, TCB_UPPER = 1, TCB_CAT_UPPER = 2 } tcb_direction;

typedef enum tcb_verdict { TCB_VANISHES = 0, TCB_UNDECIDED = 1 } tcb_verdict;

TCB_API const char* tcb_version(void);
TCB_API const char* tcb_last_error(void);
TCB_API const char* tcb_status_name(tcb_status s);
TCB_API void tcb_options_init(tcb_options* opts);
TCB_API void tcb_string_free(char* s);

/* Descriptors */
TCB_API tcb_status tcb_descriptor_parse(const char* json_text, tcb_descriptor** out);
TCB_API tcb_status tcb_descriptor_builtin(const char* name, tcb_descriptor** out);
TCB_API const char* tcb_descriptor_name(const tcb_descriptor* d);
TCB_API void tcb_descriptor_free(tcb_descriptor* d);

TCB_API size_t tcb_builtin_count(void);
TCB_API const char* tcb_builtin_name(size_t i);
TCB_API tcb_status tcb_builtin_json(const char* name, char** out);

/* Evaluation. On TCB_INCONSISTENT the two conflicting rule ids are available
 * through tcb_last_conflict. */
TCB_API tcb_status tcb_evaluate(const tcb_descriptor* d, const tcb_options* opts, tcb_report** out);
TCB_API tcb_status tcb_last_conflict(const char** lower_rule, const char** upper_rule);
TCB_API tcb_status tcb_report_interval(const tcb_report* r, int64_t* lower, int64_t* upper);
TCB_API tcb_status tcb_report_json(const tcb_report* r, char** out);
TCB_API tcb_status tcb_report_text(const tcb_report* r, char** out);
TCB_API size_t tcb_report_rule_count(const tcb_report* r);
TCB_API tcb_status tcb_report_rule(const tcb_report* r, size_t i, const char** id, tcb_direction* dir,
                                   int64_t* value);
TCB_API void tcb_report_free(tcb_report* r);

/* Self-checks. `only` may be NULL, a module name or a full check name.
 * Returns TCB_CHECK_FAILED when any selected check fails. */
TCB_API tcb_status tcb_verify(const char* only, int inject_fault, char** out_table, size_t* failed_count);

/* Number-theoretic helpers */
TCB_API tcb_status tcb_binom_mod_p(uint64_t n, uint64_t k, uint64_t p, uint64_t* out);
TCB_API tcb_status tcb_kummer_carries(uint64_t m, uint64_t k, uint64_t p, uint64_t* out);
TCB_API int tcb_has_digit_two_base3(uint64_t m);
TCB_API tcb_status tcb_vclass_verdict(unsigned group_order, unsigned dim, tcb_verdict* out);

#ifdef __cplusplus
}
#endif

#endif
