#ifndef LECHLAB_DOUBLE_DESCRIPTION_HPP
#define LECHLAB_DOUBLE_DESCRIPTION_HPP

#include "lechlab/numeric.hpp"

#include <cstdint>
#include <vector>

namespace lech {

using IntVec = std::vector<Integer>;
using IntMat = std::vector<IntVec>;

/// An extreme ray of a pointed cone {y : A y >= 0}, with the set of rows of A
/// tight at the ray (one bit per row).
struct ExtremeRay {
  IntVec v;
  std::vector<std::uint64_t> tightBits;

  bool isTight(size_t row) const { return (tightBits[row >> 6] >> (row & 63)) & 1; }
};

/// Double description: all extreme rays of {y in R^n : row . y >= 0 for each
/// row}. Requires the cone to be pointed (rank of the rows equals n); throws
/// InternalError otherwise. Rays are gcd-normalized; deterministic order.
std::vector<ExtremeRay> extremeRays(const IntMat& rows);

/// Rank of an integer matrix (fraction-free elimination).
int intRank(IntMat m);

/// Determinant of a square integer matrix (Bareiss).
Integer intDet(IntMat m);

Integer dotProduct(const IntVec& a, const IntVec& b);
void gcdNormalize(IntVec& v);

}  // namespace lech

#endif
