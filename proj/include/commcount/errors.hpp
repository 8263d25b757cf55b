#pragma once

#include <stdexcept>
#include <string>

namespace commcount {

// Bad arguments, unreadable files, violated operation preconditions. CLI exit code 1.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A bounded search ran out of budget (witness scan, cover search, enumeration cap).
// Distinct from a certified "none". CLI exit code 2.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; always a bug. CLI exit code 3.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace commcount
