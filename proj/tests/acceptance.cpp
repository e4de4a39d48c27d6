// Acceptance gate: runs the full validation suite at a pinned seed and the
// default parameter point, printing one pass/fail line per criterion.
#include <cstdio>

#include "kerrspin/validation.hpp"

int main() {
    const auto results = kerrspin::run_validation_suite(20260824ULL, 1.0, 0.8);
    bool all = true;
    for (const auto& r : results) {
        std::printf("%s: %s — %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "acceptance: all criteria met"
                            : "acceptance: some criteria FAILED");
    return all ? 0 : 1;
}
