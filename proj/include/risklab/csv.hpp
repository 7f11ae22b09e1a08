#pragma once

#include <string>

namespace risklab {

// Shortest decimal representation that round-trips the double exactly.
// Golden CSV files stay byte-stable without precision loss.
std::string format_double(double v);

} // namespace risklab
