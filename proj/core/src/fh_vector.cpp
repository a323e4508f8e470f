#include "arimat/fh_vector.hpp"

#include <sstream>

namespace arimat {

namespace {

std::string joined(const std::vector<Int>& entries) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ", ";
        os << entries[i];
    }
    os << ")";
    return os.str();
}

} // namespace

std::string FVector::to_string() const { return joined(entries); }
std::string HVector::to_string() const { return joined(entries); }

} // namespace arimat
