#pragma once

#include <stdexcept>
#include <string>

namespace kaleido {

/// A computed structure disagreed with what the construction guarantees, or
/// with the shipped reference tables.
class ConsistencyError : public std::runtime_error {
   public:
    explicit ConsistencyError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace kaleido
