#pragma once

#include "orenil/harness.hpp"
#include "orenil/instance.hpp"

#include <optional>
#include <vector>

namespace orenil {

struct SuiteOutcome {
    LemmaReport report;
    double millis = 0.0;
};

struct SuiteRun {
    std::vector<SuiteOutcome> outcomes;
    std::optional<TheoremTrace> trace; // present when maintheorem passed
    bool overall = false;
};

/// Runs the selected verification suites on the instance with the pinned
/// default parameters; errors inside a suite (including hypothesis
/// violations) become failure entries, never crashes. With parallel set the
/// suites run concurrently (all verification is pure).
SuiteRun run_suites(const InstanceSpec &instance,
                    const std::vector<CheckId> &selection, bool parallel);

/// Stable machine-readable report: instance echo, per-suite results and the
/// overall verdict. Timings live under the separate "timings_ms" key so the
/// rest of the document is byte-stable across runs.
nlohmann::ordered_json suite_report_json(const InstanceSpec &instance,
                                         const SuiteRun &run);

} // namespace orenil
