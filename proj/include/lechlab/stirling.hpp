#ifndef LECHLAB_STIRLING_HPP
#define LECHLAB_STIRLING_HPP

#include "lechlab/numeric.hpp"

#include <vector>

namespace lech {

/// Unsigned Stirling numbers of the first kind, as coefficients of the rising
/// factorials P_d(n) = n(n+1)...(n+d-1) = sum_{i=0}^{d-1} s_i n^{d-i} and
/// Q_d(n) = P_d(n)/n = sum_{i=1}^{d} t_i n^{d-i}, so t_i = s_{i-1}.
struct StirlingTable {
  int d = 0;
  std::vector<Integer> s;  // s[0..d-1]
  std::vector<Integer> t;  // t[0] unused; t[1..d]

  Integer evalP(const Integer& n) const;
  Integer evalQ(const Integer& n) const;
};

/// Exact polynomial expansion; 1 <= d <= 8. The defining identities are
/// re-checked on every call.
StirlingTable stirlingTable(int d);

}  // namespace lech

#endif
