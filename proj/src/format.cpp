#include "memgrid/format.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace memgrid {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    // Plain decimals across the physically useful range, exponent form outside it.
    const double mag = std::abs(value);
    const bool plain = value == 0.0 || (mag >= 1e-4 && mag < 1e15);
    char buf[64];
    const auto res = plain ? std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed)
                           : std::to_chars(buf, buf + sizeof buf, value);
    return {buf, res.ptr};
}

bool parse_number(const std::string& text, double& out) {
    if (text == "inf" || text == "+inf") {
        out = std::numeric_limits<double>::infinity();
        return true;
    }
    if (text == "-inf") {
        out = -std::numeric_limits<double>::infinity();
        return true;
    }
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    const auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last && first != last;
}

}  // namespace memgrid
