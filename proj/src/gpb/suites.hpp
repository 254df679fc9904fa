#pragma once

#include <string>
#include <vector>

namespace gpb {

struct SuiteResult {
    std::string name;
    int n = 0;           // bound the suite ran at
    bool pass = false;
    long long cases = 0;
    std::vector<std::string> notes;  // per-check or failure detail lines
};

// Suite names: thm-a, golden, cardinality, hilbert, certify, ctype-sum,
// swaps, cocharge-class, prop-b, frobenius, hl-two-route, ctype-oracles.
// n <= 0 selects each suite's default bound.
SuiteResult run_suite(const std::string& name, int n = 0);

const std::vector<std::string>& suite_names();

// Worker-pool size: GPBASIS_THREADS when set, else hardware concurrency.
int worker_count();

}  // namespace gpb
