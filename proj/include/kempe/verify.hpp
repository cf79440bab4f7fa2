#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kempe::verify {

struct Options {
    /// Skips the q = 4 family checks and Y_3 checks beyond zeta itself.
    bool fast = false;
    std::uint64_t seed = 20240229;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    double seconds = 0.0;
    double budget_seconds = 0.0;

    bool within_budget() const noexcept { return seconds <= budget_seconds; }
    bool passed() const noexcept { return failures.empty() && within_budget(); }
};

CriterionResult prism_classes(const Options& options);
CriterionResult triangle_free_graph(const Options& options);
CriterionResult c4_free_graph(const Options& options);
CriterionResult dq_family(const Options& options);
CriterionResult yr_family(const Options& options);
CriterionResult hk_join(const Options& options);
CriterionResult two_vertex_extension(const Options& options);
CriterionResult cograph_spot_check(const Options& options);
CriterionResult five_vertex_census(const Options& options);
CriterionResult property_suites(const Options& options);

struct Criterion {
    int id;
    std::function<CriterionResult(const Options&)> run;
};

/// All criteria in order 1..10.
std::vector<Criterion> criteria();
std::vector<CriterionResult> run_all(const Options& options);

} // namespace kempe::verify
