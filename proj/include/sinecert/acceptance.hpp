#pragma once

#include <string>
#include <vector>

namespace sinecert::acceptance {

/// One checkable clause of an acceptance criterion. expected_pass is false
/// only for the two clauses whose reference data is internally inconsistent
/// (see the notes emitted with them); those are reported honestly as FAIL
/// and the suite treats FAIL-as-documented as the expected outcome.
struct ClauseResult {
    std::string name;
    bool pass = false;
    bool expected_pass = true;
    std::string note;
};

struct CriterionResult {
    int index = 0;
    std::string title;
    std::vector<ClauseResult> clauses;
    double seconds = 0.0;

    bool pass() const;         ///< every clause passes
    bool as_expected() const;  ///< every clause matches its expected status
};

/// Runs criteria 1..12. Heavy certifications honor `threads`.
std::vector<CriterionResult> run_all(int threads = 1);

bool all_as_expected(const std::vector<CriterionResult>& results);

}  // namespace sinecert::acceptance
