#include "lechlab/exponent_vector.hpp"

#include <sstream>

namespace lech {

namespace {
constexpr const char* kVarNames = "xyzwvu";
}

std::string ExponentVector::toString() const {
  if (isZero()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k < dim(); ++k) {
    if (coords_[k] == 0) continue;
    if (!first) out << "*";
    first = false;
    if (k < 6)
      out << kVarNames[k];
    else
      out << "x" << (k + 1);
    if (coords_[k] > 1) out << "^" << coords_[k];
  }
  return out.str();
}

}  // namespace lech
