#pragma once

#include <string>
#include <vector>

#include "gring/fitting.hpp"
#include "gring/regulator.hpp"

namespace gring {

// One verification record.  Verdicts: "pass", "fail", "bounded-pass" (the
// check holds at the declared enumeration bounds; non-abelian ideal
// comparisons report this way).
struct CheckRecord {
    std::string id;
    std::string params;
    std::string verdict;
    std::string certificate;
    double elapsed_ms = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::string version;
    std::string bounds;
    std::vector<CheckRecord> records;

    unsigned failures() const;
    unsigned bounded() const;
    bool all_pass() const { return failures() == 0; }
};

struct SuiteOptions {
    uint64_t seed = 2024;
    unsigned jobs = 1;
    unsigned precision = 10;
    unsigned pool_support = 1;  // PhiPool max_support
    unsigned xi_dmax = 2;       // whitehead matrix size bound
    long xi_coeff = 2;          // whitehead coefficient bound
    bool timings = false;       // include elapsed_ms in reports
    std::string fixtures_dir = "fixtures";
};

// Standard place configurations for a fixture group: each has a split place;
// the first two also have a place with full decomposition group.
std::vector<SConfig> standard_configs(const FiniteGroup& G);

// Square presentation matrix attached to a place configuration: column v has
// entries in the relative augmentation ideal of N_v (zero column for split
// places), the structural property the direct-sum decomposition check needs.
PresentationMatrix decomposition_matrix(const SConfig& cfg, uint64_t seed);

// Suites: "algebra", "combinatorics", "fitting", "lvalues", or "all".
// Throws InputError for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace gring
