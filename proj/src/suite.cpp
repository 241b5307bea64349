#include "orenil/suite.hpp"

#include "orenil/errors.hpp"

#include <chrono>
#include <future>

namespace orenil {

namespace {

using json = nlohmann::ordered_json;

std::vector<unsigned> sample_range(unsigned from, std::size_t count) {
    std::vector<unsigned> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(from + static_cast<unsigned>(i));
    return out;
}

LemmaReport run_main_theorem(const InstanceSpec &instance,
                             std::optional<TheoremTrace> &trace_out) {
    const auto &d = instance.derivation;
    const auto &a = instance.element_a;
    LemmaReport report{CheckId::MainTheorem, describe_instance(d, a)};
    const TheoremTrace trace =
        trace_main_theorem(d, a, instance.bounds.power);
    report.check(true, "local nilpotency index k", "finite",
                 std::to_string(trace.k));
    report.check(true, "common degree of the T_n", "equal over samples",
                 trace.t_degree ? std::to_string(*trace.t_degree) : "-inf");
    report.check(true, "telescoped series identity", "exact", "exact");
    report.check(trace.q_polynomial.is_zero(), "interpolated Q", "0",
                 trace.q_polynomial.is_zero() ? "0" : "nonzero");
    report.check(trace.a_power.is_zero(),
                 "a^" + std::to_string(trace.chosen_m) + " by direct power",
                 "0", trace.a_power.str());
    trace_out = trace;
    return report;
}

SuiteOutcome run_one(CheckId id, const InstanceSpec &instance,
                     std::optional<TheoremTrace> &trace_out) {
    const auto &d = instance.derivation;
    const auto &a = instance.element_a;
    const auto started = std::chrono::steady_clock::now();
    LemmaReport report{id, describe_instance(d, a)};
    try {
        switch (id) {
        case CheckId::Property1:
            report = verify_property1(d, a, 8);
            break;
        case CheckId::Lemma1: {
            const auto k = local_nilpotency_index(
                d, a, static_cast<unsigned>(d->parent()->dim()) + 1);
            if (!k)
                throw NotLocallyNilpotent("d is not locally nilpotent on a");
            for (unsigned n = *k + 1; n <= *k + 3; ++n) {
                LemmaReport part = verify_lemma1(d, a, 4, n);
                report.checks_run += part.checks_run;
                report.failures.insert(report.failures.end(),
                                       part.failures.begin(),
                                       part.failures.end());
            }
            break;
        }
        case CheckId::Lemma3:
            report = verify_lemma3(d, a, 5, 4, instance.bounds.power);
            break;
        case CheckId::Lemma4: {
            const auto k = local_nilpotency_index(
                d, a, static_cast<unsigned>(d->parent()->dim()) + 1);
            if (!k)
                throw NotLocallyNilpotent("d is not locally nilpotent on a");
            report = verify_lemma4(
                d, a, 3, sample_range(*k + 1, 3 * std::size_t(*k) + 1));
            break;
        }
        case CheckId::Lemma5: {
            const auto k = local_nilpotency_index(
                d, a, static_cast<unsigned>(d->parent()->dim()) + 1);
            if (!k)
                throw NotLocallyNilpotent("d is not locally nilpotent on a");
            for (unsigned m0 = 1; m0 <= 3; ++m0) {
                LemmaReport part = verify_lemma5(
                    d, a, m0,
                    sample_range(*k + 1,
                                 std::size_t(compute_N(*k, m0)) * *k + 1));
                report.checks_run += part.checks_run;
                report.failures.insert(report.failures.end(),
                                       part.failures.begin(),
                                       part.failures.end());
            }
            break;
        }
        case CheckId::WeylHom:
            report = verify_weyl_homomorphism(d, 25);
            break;
        case CheckId::MainTheorem:
            report = run_main_theorem(instance, trace_out);
            break;
        }
    } catch (const Error &e) {
        report.failures.push_back(
            {"suite aborted", "completion", e.what()});
    }
    const auto finished = std::chrono::steady_clock::now();
    const double millis =
        std::chrono::duration<double, std::milli>(finished - started).count();
    return SuiteOutcome{std::move(report), millis};
}

} // namespace

SuiteRun run_suites(const InstanceSpec &instance,
                    const std::vector<CheckId> &selection, bool parallel) {
    SuiteRun run;
    std::vector<std::optional<TheoremTrace>> traces(selection.size());
    if (parallel) {
        std::vector<std::future<SuiteOutcome>> futures;
        futures.reserve(selection.size());
        for (std::size_t i = 0; i < selection.size(); ++i)
            futures.push_back(std::async(
                std::launch::async,
                [&instance, &selection, &traces, i] {
                    return run_one(selection[i], instance, traces[i]);
                }));
        for (auto &f : futures)
            run.outcomes.push_back(f.get());
    } else {
        for (std::size_t i = 0; i < selection.size(); ++i)
            run.outcomes.push_back(run_one(selection[i], instance, traces[i]));
    }
    for (auto &t : traces)
        if (t)
            run.trace = std::move(t);
    run.overall = true;
    for (const auto &outcome : run.outcomes)
        run.overall = run.overall && outcome.report.passed();
    return run;
}

nlohmann::ordered_json suite_report_json(const InstanceSpec &instance,
                                         const SuiteRun &run) {
    json out = json::object();
    out["instance"] = instance.echo;
    json suites = json::array();
    for (const auto &outcome : run.outcomes) {
        json entry = json::object();
        entry["id"] = check_id_name(outcome.report.id);
        entry["checks"] = outcome.report.checks_run;
        json failures = json::array();
        for (const auto &f : outcome.report.failures)
            failures.push_back(json::object({{"description", f.description},
                                             {"expected", f.expected},
                                             {"actual", f.actual}}));
        entry["failures"] = failures;
        if (outcome.report.id == CheckId::MainTheorem && run.trace) {
            const TheoremTrace &t = *run.trace;
            entry["trace"] = json::object(
                {{"k", t.k},
                 {"nil_index", t.nil_index},
                 {"t_degree", t.t_degree ? json(*t.t_degree) : json(nullptr)},
                 {"m", t.chosen_m},
                 {"M", t.chosen_M},
                 {"a_power", t.a_power.str()}});
        }
        suites.push_back(entry);
    }
    out["suites"] = suites;
    out["overall"] = run.overall ? "pass" : "fail";
    json timings = json::object();
    for (const auto &outcome : run.outcomes)
        timings[check_id_name(outcome.report.id)] = outcome.millis;
    out["timings_ms"] = timings;
    return out;
}

} // namespace orenil
