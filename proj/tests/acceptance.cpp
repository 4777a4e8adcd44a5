// Runs criteria 1-10 at their full ranges and prints one line per criterion.
// Exit status is nonzero if any criterion fails.

#include "dexact/checks.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

int main(int argc, char** argv)
{
    dexact::AcceptanceOptions options;
    for (int k = 1; k + 1 < argc; ++k)
        if (std::strcmp(argv[k], "--max-n") == 0)
            options.max_n = std::atoi(argv[k + 1]);

    bool ok = true;
    double total = 0;
    dexact::run_acceptance(options, [&](const dexact::CriterionResult& r) {
        const char* verdict = r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL";
        std::printf("%s criterion %d: %s (%zu cases, %.2f s): %s\n", verdict, r.id, r.title.c_str(), r.cases, r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        ok = ok && (r.passed || r.skipped);
        total += r.seconds;
    });
    std::printf("%s in %.2f s\n", ok ? "all criteria pass" : "some criteria FAIL", total);
    return ok ? 0 : 1;
}
