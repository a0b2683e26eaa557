/* Exercises the shared library through its C header only. */
#include "tcbound/tcbound.h"

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                        \
    do {                                                                    \
        if (!(cond)) {                                                      \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                     \
        }                                                                   \
    } while (0)

static const char* kRp2 =
    "{\"name\":\"rp2\",\"dim\":2,\"pi1\":{\"type\":\"cyclic\",\"order\":2},"
    "\"cohomology\":{\"preset\":\"rp\",\"n\":2}}";

static void test_evaluate(void)
{
    tcb_descriptor* d = NULL;
    tcb_report* r = NULL;
    tcb_options opts;
    int64_t lo = 0, hi = 0;
    char* json = NULL;
    char* text = NULL;
    const char* id = NULL;
    tcb_direction dir;
    int64_t value = 0;

    EXPECT(tcb_descriptor_parse(kRp2, &d) == TCB_OK);
    EXPECT(strcmp(tcb_descriptor_name(d), "rp2") == 0);
    tcb_options_init(&opts);
    EXPECT(tcb_evaluate(d, &opts, &r) == TCB_OK);
    EXPECT(tcb_report_interval(r, &lo, &hi) == TCB_OK);
    EXPECT(lo == 4 && hi == 4);
    EXPECT(tcb_report_rule_count(r) >= 3);
    EXPECT(tcb_report_rule(r, 0, &id, &dir, &value) == TCB_OK);
    EXPECT(strcmp(id, "unreduced_minimum") == 0 && dir == TCB_LOWER && value == 1);
    EXPECT(tcb_report_rule(r, 999, &id, &dir, &value) == TCB_INVALID_ARGUMENT);
    EXPECT(tcb_report_json(r, &json) == TCB_OK);
    EXPECT(strstr(json, "\"input_hash\": \"sha256:") != NULL);
    EXPECT(tcb_report_text(r, &text) == TCB_OK);
    EXPECT(strstr(text, "TC in [4, 4]") != NULL);
    tcb_string_free(json);
    tcb_string_free(text);
    tcb_report_free(r);

    opts.reduced = 1;
    EXPECT(tcb_evaluate(d, &opts, &r) == TCB_OK);
    EXPECT(tcb_report_interval(r, &lo, &hi) == TCB_OK);
    EXPECT(lo == 3 && hi == 3);
    tcb_report_free(r);
    tcb_descriptor_free(d);
}

static void test_errors(void)
{
    tcb_descriptor* d = NULL;
    tcb_report* r = NULL;
    const char* lo = NULL;
    const char* hi = NULL;

    EXPECT(tcb_descriptor_parse("{\"name\":\"x\",\"dim\":2,\"pi1\":{\"type\":\"bogus\"}}", &d) == TCB_SCHEMA);
    EXPECT(d == NULL);
    EXPECT(strstr(tcb_last_error(), "pi1.type") != NULL);
    EXPECT(tcb_descriptor_parse("not json", &d) == TCB_SCHEMA);
    EXPECT(tcb_descriptor_parse(NULL, &d) == TCB_INVALID_ARGUMENT);
    EXPECT(tcb_descriptor_builtin("no_such_space", &d) == TCB_INVALID_ARGUMENT);

    EXPECT(tcb_descriptor_parse(
               "{\"name\":\"bad\",\"dim\":2,\"pi1\":{\"type\":\"cyclic\",\"order\":2},"
               "\"cohomology\":{\"preset\":\"rp\",\"n\":2},\"known_tc\":{\"value\":9,\"cite\":\"wrong\"}}",
               &d) == TCB_OK);
    EXPECT(tcb_evaluate(d, NULL, &r) == TCB_INCONSISTENT);
    EXPECT(r == NULL);
    EXPECT(tcb_last_conflict(&lo, &hi) == TCB_OK);
    EXPECT(strcmp(lo, "known_tc") == 0);
    EXPECT(strcmp(hi, "z2_canonical_class") == 0);
    tcb_descriptor_free(d);

    EXPECT(strcmp(tcb_status_name(TCB_RESOURCE), "resource") == 0);
}

static void test_builtins_and_helpers(void)
{
    size_t n = tcb_builtin_count();
    size_t i;
    uint64_t out = 0;
    tcb_verdict v;
    char* js = NULL;
    char* table = NULL;
    size_t failed = 99;

    EXPECT(n >= 40);
    EXPECT(tcb_builtin_name(n) == NULL);
    for (i = 0; i < n; ++i) {
        tcb_descriptor* d = NULL;
        tcb_report* r = NULL;
        EXPECT(tcb_descriptor_builtin(tcb_builtin_name(i), &d) == TCB_OK);
        EXPECT(tcb_evaluate(d, NULL, &r) == TCB_OK);
        tcb_report_free(r);
        tcb_descriptor_free(d);
    }
    EXPECT(tcb_builtin_json("lens_skeleton_n1", &js) == TCB_OK);
    EXPECT(strstr(js, "\"lens_skeleton\"") != NULL);
    tcb_string_free(js);

    EXPECT(tcb_binom_mod_p(10, 3, 3, &out) == TCB_OK && out == 0);
    EXPECT(tcb_binom_mod_p(10, 3, 4, &out) == TCB_INVALID_ARGUMENT);
    EXPECT(tcb_kummer_carries(4, 2, 2, &out) == TCB_OK && out == 1);
    EXPECT(tcb_has_digit_two_base3(5) == 1);
    EXPECT(tcb_has_digit_two_base3(4) == 0);
    EXPECT(tcb_vclass_verdict(3, 2, &v) == TCB_OK && v == TCB_UNDECIDED);
    EXPECT(tcb_vclass_verdict(2, 7, &v) == TCB_OK && v == TCB_VANISHES);
    EXPECT(tcb_vclass_verdict(5, 4, &v) == TCB_UNSUPPORTED);
    EXPECT(tcb_vclass_verdict(3, 1, &v) == TCB_INVALID_ARGUMENT);

    EXPECT(tcb_verify("padic.kummer", 0, &table, &failed) == TCB_OK);
    EXPECT(failed == 0);
    EXPECT(strstr(table, "padic.kummer") != NULL);
    tcb_string_free(table);
    EXPECT(tcb_verify("cohomology", 1, &table, &failed) == TCB_CHECK_FAILED);
    EXPECT(failed == 1);
    tcb_string_free(table);
    EXPECT(tcb_verify("nothing", 0, NULL, NULL) == TCB_INVALID_ARGUMENT);
    EXPECT(strcmp(tcb_version(), "0.3.0") == 0);
}

int main(void)
{
    test_evaluate();
    test_errors();
    test_builtins_and_helpers();
    if (failures) {
        fprintf(stderr, "%d C API expectation(s) failed\n", failures);
        return 1;
    }
    printf("C API: all expectations met\n");
    return 0;
}
