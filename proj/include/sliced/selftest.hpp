#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sliced::selftest {

enum class Level { Quick, Full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Runs the acceptance criteria, printing one pass/fail line per criterion.
/// Quick level trims the trial counts to stay under a minute.
std::vector<CriterionResult> run(Level level, std::ostream& out);

int count_failures(const std::vector<CriterionResult>& results);

}  // namespace sliced::selftest
