#pragma once

#include <stdexcept>
#include <string>

namespace korbit {

// A mathematical invariant the code relies on was violated (non-exact
// division, path-independence mismatch, zero normal weight, ...).  These
// indicate a bug, not bad input.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

// Split-edge disambiguation found zero or two candidate components.
class ambiguity_error : public invariant_error {
public:
    explicit ambiguity_error(const std::string& what) : invariant_error(what) {}
};

}  // namespace korbit
