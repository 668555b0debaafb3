#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "starcore/generators.hpp"
#include "starcore/report_json.hpp"

namespace starcore::lab {

struct SuiteOptions {
    std::vector<TheoremId> theorems{all_theorems.begin(), all_theorems.end()};
    std::size_t trials = 1;
    std::size_t size_bound = 4;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    // Where to write the reproducer for the first VIOLATION; nothing is
    // written when unset.
    std::optional<std::filesystem::path> reproducer_dir;
};

struct TrialOutcome {
    std::size_t trial = 0;
    std::optional<TheoremReport> report; // empty when generation was exhausted
    std::optional<Instance> instance;
    int attempts = 0;
    std::string error;
};

struct TheoremSummary {
    TheoremId theorem{};
    std::vector<TrialOutcome> outcomes;

    std::size_t count(Verdict v) const {
        return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [v](const TrialOutcome& o) {
            return o.report && o.report->verdict == v;
        }));
    }
    std::size_t generation_failures() const {
        return static_cast<std::size_t>(
            std::count_if(outcomes.begin(), outcomes.end(), [](const TrialOutcome& o) { return !o.report; }));
    }
    // Trials where the conclusion side (side2) held / failed.
    std::size_t conclusion_count(bool holds) const {
        return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [holds](const TrialOutcome& o) {
            return o.report && o.report->verdict == Verdict::EquivalenceHolds && o.report->side2_holds() == holds;
        }));
    }
};

struct SuiteResult {
    SuiteOptions options;
    std::vector<TheoremSummary> theorems;
    std::optional<std::filesystem::path> reproducer;

    bool any_violation() const {
        return std::any_of(theorems.begin(), theorems.end(),
                           [](const TheoremSummary& t) { return t.count(Verdict::Violation) > 0; });
    }
    bool any_generation_failure() const {
        return std::any_of(theorems.begin(), theorems.end(),
                           [](const TheoremSummary& t) { return t.generation_failures() > 0; });
    }
};

inline TrialOutcome run_trial(TheoremId id, std::uint64_t seed, std::size_t trial, std::size_t size_bound) {
    TrialOutcome out;
    out.trial = trial;
    try {
        gen::Trial t = gen::draw_trial(id, seed, trial, size_bound);
        out.report = std::move(t.report);
        out.instance = std::move(t.instance);
        out.attempts = t.attempts;
    } catch (const GenerationExhausted& e) {
        out.error = e.what();
    }
    return out;
}

inline json reproducer_json(TheoremId id, std::uint64_t seed, std::size_t size_bound, const TrialOutcome& o) {
    return json{{"theorem", std::string(to_string(id))},
                {"seed", seed},
                {"trial", o.trial},
                {"size", size_bound},
                {"instances", to_json(id, *o.instance)},
                {"report", to_json(*o.report)}};
}

// Trials are independent: each owns the RNG stream for (seed, theorem,
// trial), so the merged result does not depend on `jobs`.
inline SuiteResult run_suite(const SuiteOptions& opts) {
    if (opts.trials == 0) throw Error("trials must be at least 1");
    SuiteResult result;
    result.options = opts;
    for (TheoremId id : opts.theorems) {
        TheoremSummary s;
        s.theorem = id;
        s.outcomes.resize(opts.trials);
        result.theorems.push_back(std::move(s));
    }

    const std::size_t total = opts.theorems.size() * opts.trials;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < total; k = next++) {
            const std::size_t t = k / opts.trials;
            const std::size_t trial = k % opts.trials;
            result.theorems[t].outcomes[trial] = run_trial(opts.theorems[t], opts.seed, trial, opts.size_bound);
        }
    };
    const unsigned jobs = std::max(1U, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const auto& s : result.theorems) {
        for (const auto& o : s.outcomes) {
            if (!o.report || o.report->verdict != Verdict::Violation) continue;
            if (opts.reproducer_dir) {
                std::filesystem::create_directories(*opts.reproducer_dir);
                auto path = *opts.reproducer_dir / ("reproducer-" + std::string(to_string(s.theorem)) + "-seed" +
                                                    std::to_string(opts.seed) + "-trial" + std::to_string(o.trial) +
                                                    ".json");
                write_json_file(path, reproducer_json(s.theorem, opts.seed, opts.size_bound, o));
                result.reproducer = path;
            }
            return result;
        }
    }
    return result;
}

inline json to_json(const TheoremSummary& s) {
    json trials = json::array();
    for (const auto& o : s.outcomes) {
        json t{{"trial", o.trial}};
        if (o.report) {
            t["n"] = o.instance->a.rows();
            t["verdict"] = std::string(to_string(o.report->verdict));
            t["detail"] = o.report->detail;
            t["attempts"] = o.attempts;
        } else {
            t["verdict"] = "GenerationExhausted";
            t["detail"] = o.error;
        }
        trials.push_back(std::move(t));
    }
    return json{{"theorem", std::string(to_string(s.theorem))},
                {"two_sided", is_two_sided(s.theorem)},
                {"trials", s.outcomes.size()},
                {"equivalence_holds", s.count(Verdict::EquivalenceHolds)},
                {"violations", s.count(Verdict::Violation)},
                {"generation_failures", s.generation_failures()},
                {"conclusion_true", s.conclusion_count(true)},
                {"conclusion_false", s.conclusion_count(false)},
                {"results", std::move(trials)}};
}

inline json to_json(const SuiteResult& r) {
    json theorems = json::array();
    for (const auto& s : r.theorems) theorems.push_back(to_json(s));
    json j{{"seed", r.options.seed},
           {"trials", r.options.trials},
           {"size", r.options.size_bound},
           {"violation", r.any_violation()},
           {"generation_failure", r.any_generation_failure()},
           {"theorems", std::move(theorems)}};
    if (r.reproducer) j["reproducer"] = r.reproducer->string();
    return j;
}

} // namespace starcore::lab
