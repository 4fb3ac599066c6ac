#include "core/csv.hpp"

#include <cstdio>

namespace svmflow::csv {

std::string num(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace svmflow::csv
