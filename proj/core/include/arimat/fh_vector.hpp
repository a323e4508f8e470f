#pragma once

#include <string>
#include <vector>

#include "arimat/numbers.hpp"

namespace arimat {

// entries (f_{-1}, f_0, ..., f_{r-1}); entries[i] counts the rank-i
// elements, so entries[0] = f_{-1} = 1 for a poset with a bottom.
struct FVector {
    std::vector<Int> entries;

    friend bool operator==(const FVector&, const FVector&) = default;
    std::string to_string() const;
};

// entries (h_0, ..., h_r)
struct HVector {
    std::vector<Int> entries;

    friend bool operator==(const HVector&, const HVector&) = default;
    std::string to_string() const;
};

} // namespace arimat
