#pragma once

#include <stdexcept>
#include <string>

namespace cubics {

/// Hard failure when a computation exceeds its declared resource caps
/// (group closure order, Groebner degree or basis size).
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cubics
