#pragma once

#include <stdexcept>
#include <string>

namespace arimat {

// Bad caller input: malformed files, dimension mismatches, violated preconditions.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical identity that must hold failed to hold.
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace arimat
