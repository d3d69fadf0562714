// Acceptance gate: runs every verification suite and prints one line per
// acceptance criterion. Exits nonzero if any criterion fails.
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "germlab/verify.hpp"

using germlab::CheckResult;
using germlab::VerificationReport;

namespace {

struct Criterion {
    std::string label;
    std::string suite;
    std::function<bool(const std::string&)> owns;
};

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::string table = argc > 1 ? argv[1] : "data/knot_table.json";
    germlab::SectionOptions opts;

    std::map<std::string, VerificationReport> reports;
    for (const char* suite : {"example1", "example3", "example4", "main-theorem", "properties"})
        reports.emplace(suite, germlab::run_suite(suite, 0, suite == std::string("properties")
                                                                ? table
                                                                : std::string(),
                                                  opts));

    std::vector<Criterion> criteria = {
        {"1 tangency exponents k/4 within 0.05", "example1",
         [](const std::string& n) { return starts_with(n, "tangency-"); }},
        {"2 three-circle links match, tangent-cone nesting differs", "example1",
         [](const std::string& n) {
             return starts_with(n, "link-") || starts_with(n, "cone-");
         }},
        {"3 piecewise map certified bilipschitz", "example1",
         [](const std::string& n) { return starts_with(n, "map-"); }},
        {"4 circle-to-sheet distance band stable across scales", "example1",
         [](const std::string& n) { return starts_with(n, "distance-band"); }},
        {"5 coned knots: equal curve polynomials, split cones differ", "example3",
         [](const std::string&) { return true; }},
        {"6 waist exponents and bridge-separated linking", "example4",
         [](const std::string&) { return true; }},
        {"7 twist family: plat unknots, linking i, surgery stability", "main-theorem",
         [](const std::string&) { return true; }},
        {"8 cross-cutting property checks", "properties",
         [](const std::string&) { return true; }},
    };

    int failed_criteria = 0;
    std::map<std::string, int> claimed;
    for (const Criterion& crit : criteria) {
        const VerificationReport& rep = reports.at(crit.suite);
        int total = 0, passed = 0;
        std::vector<const CheckResult*> failures;
        for (const CheckResult& c : rep.checks) {
            if (!crit.owns(c.name)) continue;
            ++total;
            ++claimed[crit.suite];
            if (c.pass)
                ++passed;
            else
                failures.push_back(&c);
        }
        bool ok = total > 0 && passed == total;
        if (!ok) ++failed_criteria;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << crit.label << "  (" << passed
                  << "/" << total << " checks)\n";
        for (const CheckResult* c : failures)
            std::cout << "      " << c->name << ": expected " << c->expected << ", observed "
                      << c->observed << " (tol " << c->tolerance << ")\n";
    }

    // Every suite check must be claimed by exactly one criterion.
    for (const auto& [suite, rep] : reports)
        if (claimed[suite] != int(rep.checks.size())) {
            std::cout << "FAIL  criterion coverage: suite " << suite << " has "
                      << rep.checks.size() << " checks, criteria claimed " << claimed[suite]
                      << "\n";
            ++failed_criteria;
        }

    std::cout << (failed_criteria == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
              << criteria.size() - failed_criteria << "/" << criteria.size() << " criteria)\n";
    return failed_criteria == 0 ? 0 : 1;
}
