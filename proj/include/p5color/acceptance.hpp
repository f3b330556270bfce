#ifndef P5COLOR_ACCEPTANCE_HPP
#define P5COLOR_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace p5c::accept {

struct CriterionResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double elapsed_s = 0.0;
};

// Suites: oracle, domstruct, postconditions, compatibility, basecase, smoke.
std::vector<std::string> suite_names();

// Runs one suite (or "all"). Progress lines go to `progress` when non-null.
std::vector<CriterionResult> run_suite(const std::string& name, std::ostream* progress = nullptr);

// One "[PASS]/[FAIL] name (Ns): detail" line per result; returns true when
// everything passed.
bool report(const std::vector<CriterionResult>& results, std::ostream& out);

} // namespace p5c::accept

#endif
