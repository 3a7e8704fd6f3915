// Acceptance suite: one pass/fail line per criterion, everything in exact
// arithmetic. Returns nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "qcert/suites.hpp"

namespace {

int failures = 0;

void run(int number, const char* title,
         const std::vector<qcert::VerificationReport>& reports) {
    using V = qcert::VerificationReport::Verdict;
    long pass = 0, fail = 0, err = 0;
    for (const auto& r : reports) {
        if (r.verdict == V::pass) ++pass;
        else if (r.verdict == V::fail) ++fail;
        else ++err;
    }
    const bool ok = fail == 0 && err == 0 && !reports.empty();
    if (!ok) ++failures;
    std::printf("criterion %d: %s -- %s (%ld pass / %ld fail / %ld error)\n", number,
                ok ? "PASS" : "FAIL", title, pass, fail, err);
    if (!ok)
        for (const auto& r : reports)
            if (r.verdict != V::pass) std::printf("    %s\n", qcert::to_json_line(r).c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    using namespace qcert;
    const auto t0 = std::chrono::steady_clock::now();
    const int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    run(1, "fourth-order thresholds (PD windows and failure dimensions)",
        suites::q4_thresholds(jobs));
    run(2, "sixth-order thresholds (PD windows and failure dimensions)",
        suites::q6_thresholds(jobs));
    run(3, "hand-pinned D-family block at n=8 equals [32*10^10]", suites::pinned_entry());
    run(4, "linearized systems: cancellation, recurrences, cross-order (n <= 60)",
        suites::linearized_systems(60, jobs));
    run(5, "radial kernel oracles: coefficient lists, constants, recurrences",
        suites::radial_oracles(jobs));
    run(6, "non-compactness certificates on n in [27,120]",
        suites::noncompactness(27, 120, /*with_tables=*/true, jobs));
    run(7, "definiteness engine properties on 1000 randomized matrices",
        suites::definiteness_properties(1000));
    run(8, "fault injection: perturbed inputs flip reports to fail", suites::fault_injection());

    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    std::printf("%s (%d criterion failure%s, %llds total)\n",
                failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", failures,
                failures == 1 ? "" : "s", static_cast<long long>(secs));
    return failures == 0 ? 0 : 1;
}
