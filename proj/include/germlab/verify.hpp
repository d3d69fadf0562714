#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "germlab/model.hpp"
#include "germlab/section.hpp"

namespace germlab {

struct CheckResult {
    std::string name;
    std::string anchor;  // what geometric fact the check pins down
    std::string expected;
    std::string observed;
    std::string tolerance;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    nlohmann::ordered_json parameters;
    std::vector<CheckResult> checks;
    // Wall-clock seconds; printed on the summary line but kept out of the
    // serialized report so identical inputs give byte-identical files.
    double runtime_seconds = 0;

    VerificationReport() : parameters(nlohmann::ordered_json::object()) {}

    bool verdict() const;
    nlohmann::ordered_json to_json() const;
};

// Suites: example1, example3, example4, main-theorem, properties, all.
// The optional knot table file is validated by the properties suite.
VerificationReport run_suite(const std::string& suite, std::uint64_t seed,
                             const std::string& knot_table_path = "",
                             const SectionOptions& opts = {});
const std::vector<std::string>& suite_names();

// Full invariant survey of one model at scale t: component census, nesting,
// per-component torsion polynomials, pairwise linking, tangent cone.  Shared
// by the command line tool and the determinism property check.
nlohmann::ordered_json invariants_report(const GermModel& model, double t, std::uint64_t seed,
                                         const SectionOptions& opts = {});

}  // namespace germlab
