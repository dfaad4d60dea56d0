#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace folner {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    int workers = 2;
    /// Print one line per criterion as it completes.
    bool verbose = true;
};

/// Runs the whole verification battery; one entry per criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream& out);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace folner
