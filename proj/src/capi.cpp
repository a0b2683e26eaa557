#include "tcbound/tcbound.h"

#include "tcbound/bounds.hpp"
#include "tcbound/error.hpp"
#include "tcbound/io.hpp"
#include "tcbound/padic.hpp"
#include "tcbound/selfcheck.hpp"
#include "tcbound/vclass.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct tcb_descriptor {
    tcb::io::json source;
    tcb::bounds::SpaceDescriptor space;
};

struct tcb_report {
    tcb::bounds::BoundReport report;
    std::string input_hash;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_conflict_lower;
thread_local std::string g_conflict_upper;

tcb_status fail(tcb_status s, const std::string& msg)
{
    g_last_error = msg;
    return s;
}

template <class F>
tcb_status guarded(F&& f)
{
    g_last_error.clear();
    try {
        return f();
    } catch (const tcb::InconsistencyError& e) {
        g_conflict_lower = e.lower_rule();
        g_conflict_upper = e.upper_rule();
        return fail(TCB_INCONSISTENT, e.what());
    } catch (const tcb::SchemaError& e) {
        return fail(TCB_SCHEMA, e.what());
    } catch (const tcb::ValidationError& e) {
        return fail(TCB_INVALID_ARGUMENT, e.what());
    } catch (const tcb::ResourceError& e) {
        return fail(TCB_RESOURCE, e.what());
    } catch (const tcb::UnsupportedError& e) {
        return fail(TCB_UNSUPPORTED, e.what());
    } catch (const tcb::io::json::exception& e) {
        return fail(TCB_SCHEMA, e.what());
    } catch (const std::bad_alloc&) {
        return fail(TCB_RESOURCE, "out of memory");
    } catch (const std::exception& e) {
        return fail(TCB_INTERNAL, e.what());
    } catch (...) {
        return fail(TCB_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tcb_descriptor* make_descriptor(tcb::io::json j)
{
    auto space = tcb::io::parse_descriptor(j);
    return new tcb_descriptor{std::move(j), std::move(space)};
}

} // namespace

extern "C" {

const char* tcb_version(void) { return tcb::io::kToolVersion; }

const char* tcb_last_error(void) { return g_last_error.c_str(); }

const char* tcb_status_name(tcb_status s)
{
    switch (s) {
    case TCB_OK: return "ok";
    case TCB_INVALID_ARGUMENT: return "invalid_argument";
    case TCB_SCHEMA: return "schema";
    case TCB_INCONSISTENT: return "inconsistent";
    case TCB_RESOURCE: return "resource";
    case TCB_UNSUPPORTED: return "unsupported";
    case TCB_CHECK_FAILED: return "check_failed";
    case TCB_INTERNAL: return "internal";
    }
    return "unknown";
}

void tcb_options_init(tcb_options* opts)
{
    if (opts)
        *opts = tcb_options{0, 0, 0};
}

void tcb_string_free(char* s) { std::free(s); }

tcb_status tcb_descriptor_parse(const char* json_text, tcb_descriptor** out)
{
    if (!json_text || !out)
        return fail(TCB_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        tcb::io::json j;
        try {
            j = tcb::io::json::parse(json_text);
        } catch (const tcb::io::json::parse_error& e) {
            throw tcb::SchemaError(std::string("descriptor is not valid JSON: ") + e.what());
        }
        *out = make_descriptor(std::move(j));
        return TCB_OK;
    });
}

tcb_status tcb_descriptor_builtin(const char* name, tcb_descriptor** out)
{
    if (!name || !out)
        return fail(TCB_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        const auto* j = tcb::io::find_builtin(name);
        if (!j)
            return fail(TCB_INVALID_ARGUMENT, std::string("no built-in descriptor named '") + name + "'");
        *out = make_descriptor(*j);
        return TCB_OK;
    });
}

const char* tcb_descriptor_name(const tcb_descriptor* d) { return d ? d->space.name.c_str() : ""; }

void tcb_descriptor_free(tcb_descriptor* d) { delete d; }

size_t tcb_builtin_count(void) { return tcb::io::builtin_descriptors().size(); }

const char* tcb_builtin_name(size_t i)
{
    const auto& all = tcb::io::builtin_descriptors();
    return i < all.size() ? all[i].first.c_str() : nullptr;
}

tcb_status tcb_builtin_json(const char* name, char** out)
{
    if (!name || !out)
        return fail(TCB_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const auto* j = tcb::io::find_builtin(name);
        if (!j)
            return fail(TCB_INVALID_ARGUMENT, std::string("no built-in descriptor named '") + name + "'");
        *out = dup_string(j->dump(2) + "\n");
        return TCB_OK;
    });
}

tcb_status tcb_evaluate(const tcb_descriptor* d, const tcb_options* opts, tcb_report** out)
{
    if (!d || !out)
        return fail(TCB_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    g_conflict_lower.clear();
    g_conflict_upper.clear();
    return guarded([&] {
        tcb::bounds::EvaluateOptions eo;
        bool reduced = false;
        if (opts) {
            eo.max_depth = opts->max_depth;
            eo.exhaustive = opts->exhaustive != 0;
            reduced = opts->reduced != 0;
        }
        auto r = tcb::bounds::evaluate(d->space, eo);
        if (reduced)
            r = tcb::bounds::with_convention(std::move(r), true);
        *out = new tcb_report{std::move(r), tcb::io::input_hash(d->source)};
        return TCB_OK;
    });
}

tcb_status tcb_last_conflict(const char** lower_rule, const char** upper_rule)
{
    if (g_conflict_lower.empty() && g_conflict_upper.empty())
        return fail(TCB_INVALID_ARGUMENT, "no conflict recorded");
    if (lower_rule)
        *lower_rule = g_conflict_lower.c_str();
    if (upper_rule)
        *upper_rule = g_conflict_upper.c_str();
    return TCB_OK;
}

tcb_status tcb_report_interval(const tcb_report* r, int64_t* lower, int64_t* upper)
{
    if (!r)
        return fail(TCB_INVALID_ARGUMENT, "null report");
    if (lower)
        *lower = r->report.lower;
    if (upper)
        *upper = r->report.upper;
    return TCB_OK;
}

tcb_status tcb_report_json(const tcb_report* r, char** out)
{
    if (!r || !out)
        return fail(TCB_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = dup_string(tcb::io::report_to_json(r->report, r->input_hash).dump(2) + "\n");
        return TCB_OK;
    });
}

tcb_status tcb_report_text(const tcb_report* r, char** out)
{
    if (!r || !out)
        return fail(TCB_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = dup_string(tcb::io::render_text(r->report));
        return TCB_OK;
    });
}

size_t tcb_report_rule_count(const tcb_report* r) { return r ? r->report.rules.size() : 0; }

tcb_status tcb_report_rule(const tcb_report* r, size_t i, const char** id, tcb_direction* dir, int64_t* value)
{
    if (!r || i >= r->report.rules.size())
        return fail(TCB_INVALID_ARGUMENT, "rule index out of range");
    const auto& rule = r->report.rules[i];
    if (id)
        *id = rule.id.c_str();
    if (dir)
        *dir = static_cast<tcb_direction>(rule.direction);
    if (value)
        *value = rule.value;
    return TCB_OK;
}

void tcb_report_free(tcb_report* r) { delete r; }

tcb_status tcb_verify(const char* only, int inject_fault, char** out_table, size_t* failed_count)
{
    return guarded([&] {
        tcb::selfcheck::Options o;
        if (only)
            o.only = only;
        o.inject_fault = inject_fault != 0;
        const auto results = tcb::selfcheck::run(o);
        if (results.empty())
            return fail(TCB_INVALID_ARGUMENT, "no check matches '" + o.only + "'");
        size_t failed = 0;
        for (const auto& res : results)
            failed += res.passed ? 0 : 1;
        if (failed_count)
            *failed_count = failed;
        if (out_table)
            *out_table = dup_string(tcb::selfcheck::render_table(results));
        return failed ? fail(TCB_CHECK_FAILED, std::to_string(failed) + " check(s) failed") : TCB_OK;
    });
}

tcb_status tcb_binom_mod_p(uint64_t n, uint64_t k, uint64_t p, uint64_t* out)
{
    if (!out)
        return fail(TCB_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = tcb::padic::binom_mod_p(n, k, p);
        return TCB_OK;
    });
}

tcb_status tcb_kummer_carries(uint64_t m, uint64_t k, uint64_t p, uint64_t* out)
{
    if (!out)
        return fail(TCB_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = tcb::padic::kummer_carries(m, k, p);
        return TCB_OK;
    });
}

int tcb_has_digit_two_base3(uint64_t m) { return tcb::padic::has_digit_two_base3(m) ? 1 : 0; }

tcb_status tcb_vclass_verdict(unsigned group_order, unsigned dim, tcb_verdict* out)
{
    if (!out)
        return fail(TCB_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const auto v = tcb::vclass::evaluate(group_order, dim);
        if (!v)
            return fail(TCB_UNSUPPORTED, "no symbolic model for pi_1 of order " + std::to_string(group_order));
        *out = v->status == tcb::vclass::Status::Vanishes ? TCB_VANISHES : TCB_UNDECIDED;
        return TCB_OK;
    });
}

} // extern "C"
