#include "deltasym.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "deltasym/commands.hpp"
#include "deltasym/expression.hpp"

struct dsym_value {
    dsym::Value value;
};

struct dsym_report {
    dsym::Report report;
};

namespace {

thread_local std::string g_last_error;

dsym_status fail(dsym_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

dsym_status fail_error(const dsym::Error& e) {
    switch (e.kind()) {
        case dsym::ErrorKind::parse:
            return fail(DSYM_ERR_PARSE, e.what());
        case dsym::ErrorKind::internal:
            return fail(DSYM_ERR_INTERNAL, e.what());
        default:
            return fail(DSYM_ERR_DOMAIN, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* dsym_version(void) { return "1.0.0"; }

const char* dsym_last_error(void) { return g_last_error.c_str(); }

dsym_status dsym_parse(const char* text, int var_dim, dsym_value** out) {
    if (out) *out = nullptr;
    if (!text || !out) return fail(DSYM_ERR_INVALID_ARG, "null argument to dsym_parse");
    try {
        dsym::Value v = dsym::parse_expression(text, var_dim);
        *out = new dsym_value{std::move(v)};
        return DSYM_OK;
    } catch (const dsym::Error& e) {
        return fail_error(e);
    } catch (const std::exception& e) {
        return fail(DSYM_ERR_INTERNAL, e.what());
    }
}

dsym_status dsym_format(const dsym_value* value, char** out) {
    if (out) *out = nullptr;
    if (!value || !out) return fail(DSYM_ERR_INVALID_ARG, "null argument to dsym_format");
    try {
        *out = dup_string(value->value.str());
        if (!*out) return fail(DSYM_ERR_INTERNAL, "allocation failed");
        return DSYM_OK;
    } catch (const std::exception& e) {
        return fail(DSYM_ERR_INTERNAL, e.what());
    }
}

dsym_status dsym_value_equals(const dsym_value* a, const dsym_value* b, int* out) {
    if (out) *out = 0;
    if (!a || !b || !out)
        return fail(DSYM_ERR_INVALID_ARG, "null argument to dsym_value_equals");
    *out = a->value == b->value ? 1 : 0;
    return DSYM_OK;
}

void dsym_value_free(dsym_value* value) { delete value; }

dsym_status dsym_run(int argc, const char* const* argv, dsym_report** out) {
    if (out) *out = nullptr;
    if (!out || (argc > 0 && !argv))
        return fail(DSYM_ERR_INVALID_ARG, "null argument to dsym_run");
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc : 0));
    for (int i = 0; i < argc; ++i) {
        if (!argv[i]) return fail(DSYM_ERR_INVALID_ARG, "null argument string in dsym_run");
        args.emplace_back(argv[i]);
    }
    try {
        auto t0 = std::chrono::steady_clock::now();
        dsym::Report report = dsym::run_command(args);
        report.set_elapsed(
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        bool pass = report.pass();
        *out = new dsym_report{std::move(report)};
        if (!pass) return fail(DSYM_ERR_CHECK_FAILED, "some checks failed");
        return DSYM_OK;
    } catch (const dsym::Error& e) {
        return fail_error(e);
    } catch (const std::exception& e) {
        return fail(DSYM_ERR_INTERNAL, e.what());
    }
}

dsym_status dsym_report_json(const dsym_report* report, char** out) {
    if (out) *out = nullptr;
    if (!report || !out)
        return fail(DSYM_ERR_INVALID_ARG, "null argument to dsym_report_json");
    try {
        *out = dup_string(report->report.json());
        if (!*out) return fail(DSYM_ERR_INTERNAL, "allocation failed");
        return DSYM_OK;
    } catch (const std::exception& e) {
        return fail(DSYM_ERR_INTERNAL, e.what());
    }
}

dsym_status dsym_report_text(const dsym_report* report, char** out) {
    if (out) *out = nullptr;
    if (!report || !out)
        return fail(DSYM_ERR_INVALID_ARG, "null argument to dsym_report_text");
    try {
        *out = dup_string(report->report.text());
        if (!*out) return fail(DSYM_ERR_INTERNAL, "allocation failed");
        return DSYM_OK;
    } catch (const std::exception& e) {
        return fail(DSYM_ERR_INTERNAL, e.what());
    }
}

dsym_status dsym_report_pass(const dsym_report* report, int* out) {
    if (out) *out = 0;
    if (!report || !out)
        return fail(DSYM_ERR_INVALID_ARG, "null argument to dsym_report_pass");
    *out = report->report.pass() ? 1 : 0;
    return DSYM_OK;
}

void dsym_report_free(dsym_report* report) { delete report; }

void dsym_string_free(char* s) { std::free(s); }

}  // extern "C"
