#pragma once

#include <string>

namespace svmflow::csv {

/// Formats a double with 17 significant digits (exact binary64 round-trip).
std::string num(double value);

}  // namespace svmflow::csv
