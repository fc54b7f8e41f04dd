#pragma once

#include <stdexcept>
#include <string>

namespace nvenc {

// Bad index, bad argument combination, or otherwise unusable input.
class argument_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Every structure here needs at least one array element.
class empty_array_error : public argument_error {
public:
    empty_array_error() : argument_error("array must contain at least one element") {}
};

// Text input that is not a well-formed integer array.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An encoder was handed input that violates its structural precondition
// (consecutive equal elements, a broken leaf/internal duality, ...).
class precondition_error : public std::logic_error {
public:
    precondition_error(const std::string& what, std::size_t index)
        : std::logic_error(what + " (index " + std::to_string(index) + ")"), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Malformed, truncated or inconsistent encoded data.
class corruption_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace nvenc
