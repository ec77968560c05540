#pragma once

#include <stdexcept>
#include <string>

namespace dng {

// Bad user input: malformed cycle notation, degree mismatches, violated
// preconditions such as "H is not a subgroup of G".
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A computation refused because it would exceed a configured cap
// (group order cap, subgroup enumeration cap, graph size cap).
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dng
