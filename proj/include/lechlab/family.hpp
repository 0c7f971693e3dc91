#ifndef LECHLAB_FAMILY_HPP
#define LECHLAB_FAMILY_HPP

#include "lechlab/invariants.hpp"

#include <string>
#include <vector>

namespace lech {

/// Parameters of the closure of (x^a, y^b, z^c, xyz): 3 <= a <= b <= c and
/// 1/a + 1/b + 1/c <= 1.
struct FamilyHVParams {
  int a = 0, b = 0, c = 0;

  bool admissible() const;
  void validate() const;  // DomainError when inadmissible
};

/// The closed forms predicted for the family.
struct ClosedFormInvariants {
  long long mu, e, e1, e2, lambda;
};

/// lambda(k[x,y] / closure(x^a, y^b)) for a <= b: the two-case ceiling formula.
long long familyPairLength(int a, int b);

ClosedFormInvariants familyClosedForms(const FamilyHVParams& p);

/// Builds (x^a, y^b, z^c, xyz), takes the integral closure, and returns it
/// with the predicted invariants.
std::pair<MonomialIdeal, ClosedFormInvariants> familyHV(const FamilyHVParams& p);

struct FamilyDiff {
  bool match = true;
  std::vector<std::string> mismatches;
};

/// Engine-computed report vs. the closed forms, field by field.
FamilyDiff verifyFamily(const FamilyHVParams& p);

}  // namespace lech

#endif
