#pragma once

#include <span>
#include <string>

namespace kaleido {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

bool all_pass(std::span<const Check> checks);

}  // namespace kaleido
