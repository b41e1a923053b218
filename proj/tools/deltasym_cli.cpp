// Command-line front end. Talks to the core exclusively through the C API in
// deltasym.h, which keeps it an honest exercise of the shared library.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 bad usage or
// malformed expression, 3 domain error from the computation, 4 anything else.

#include <cstdio>
#include <cstring>
#include <vector>

#include "deltasym.h"

namespace {

int exit_code(dsym_status status) {
    switch (status) {
        case DSYM_OK:
            return 0;
        case DSYM_ERR_CHECK_FAILED:
            return 1;
        case DSYM_ERR_PARSE:
            return 2;
        case DSYM_ERR_DOMAIN:
            return 3;
        default:
            return 4;
    }
}

}  // namespace

int main(int argc, char** argv) {
    bool pretty = false;
    std::vector<const char*> args;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--pretty") == 0) {
            pretty = true;
        } else if (std::strcmp(argv[i], "--json") == 0) {
            pretty = false;
        } else {
            args.push_back(argv[i]);
        }
    }

    dsym_report* report = nullptr;
    dsym_status status = dsym_run(static_cast<int>(args.size()), args.data(), &report);

    if (report) {
        char* out = nullptr;
        dsym_status fmt = pretty ? dsym_report_text(report, &out)
                                 : dsym_report_json(report, &out);
        if (fmt == DSYM_OK && out) {
            std::fputs(out, stdout);
            std::fputc('\n', stdout);
            dsym_string_free(out);
        }
        dsym_report_free(report);
    } else {
        std::fprintf(stderr, "%s\n", dsym_last_error());
    }
    return exit_code(status);
}
