#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kaleido/golden.hpp"
#include "kaleido/report.hpp"

namespace kaleido::cli {

struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::pair<std::string, int64_t>> counts;
    std::vector<std::string> notes;  // informational findings, never failures
    double elapsed_ms = 0;

    bool passed() const { return all_pass(checks); }
    void check(std::string name, bool pass, std::string detail = "");
    void count(std::string name, int64_t value);
};

const std::vector<std::string> &scopes();  // "all" first

/// Runs the named suite against `tables`. Throws std::invalid_argument for an
/// unknown scope.
VerificationReport run_suite(const std::string &scope, const golden::Tables &tables);

}  // namespace kaleido::cli
