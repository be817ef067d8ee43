#pragma once

#include <stdexcept>

namespace flagcr {

// Bad input or violated precondition: unsupported field order, singular
// matrix where an invertible one is required, mismatched ambient spaces.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured resource cap would be exceeded.
class cap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagree.  This is a
// hard failure: it falsifies either the implementation or the cross-check,
// and is never silently resolved.
class verification_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace flagcr
