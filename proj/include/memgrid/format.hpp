#pragma once

#include <string>

namespace memgrid {

/// Shortest decimal form that parses back to the same double; `inf`/`-inf`/`nan`
/// for non-finite values.
std::string format_number(double value);

/// Strict parse of a whole string as a double (accepts `inf`).
bool parse_number(const std::string& text, double& out);

}  // namespace memgrid
