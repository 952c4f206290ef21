#pragma once

#include <string>
#include <vector>

namespace circpat {

/*
 * Cross-check suites driven by the CLI's verify command: every closed form,
 * stratified count, bijection image and structure validator is compared
 * against the brute-force enumerator.
 */

struct SuiteResult {
    std::string name;
    bool pass;
    std::string detail;  // first failure, or a short note of what was covered
};

SuiteResult verify_formulas_vs_oracle(int n_max);
SuiteResult verify_stratified(int n_max);
SuiteResult verify_bijection_images(int n_max);
SuiteResult verify_structure_equivalence(int n_max);

std::vector<SuiteResult> verify_all(int n_max);
bool all_pass(const std::vector<SuiteResult>& results);

}  // namespace circpat
