#pragma once

#include "ckops/connective.hpp"

#include <functional>

namespace ck {

struct CheckResult {
    std::string id;
    std::string anchor;  // short statement of the identity being exercised
    bool pass;
    std::string counterexample;  // empty when passing
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    size_t passed() const;
    size_t failed() const;
};

// Suite names accepted by run_suites, excluding "all".
const std::vector<std::string>& verify_suites();

Report run_suite(const std::string& suite, int max_dim, int max_quadric = 8);

// name may be "all"; reports come back in canonical suite order with checks
// sorted by id.
std::vector<Report> run_suites(const std::string& name, int max_dim, int max_quadric = 8);

}  // namespace ck
