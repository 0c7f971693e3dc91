#include "lechlab/family.hpp"

#include <sstream>

namespace lech {

bool FamilyHVParams::admissible() const {
  if (!(3 <= a && a <= b && b <= c)) return false;
  // 1/a + 1/b + 1/c <= 1, cleared of denominators.
  return static_cast<long long>(b) * c + static_cast<long long>(a) * c +
             static_cast<long long>(a) * b <=
         static_cast<long long>(a) * b * c;
}

void FamilyHVParams::validate() const {
  if (!admissible())
    throw DomainError("family parameters need 3 <= a <= b <= c and 1/a + 1/b + 1/c <= 1");
}

long long familyPairLength(int a, int b) {
  if (a > b) std::swap(a, b);
  long long ab = static_cast<long long>(a) * b;
  if (b % a == 0) return (ab + b + 1) / 2;       // ceil((ab + b) / 2)
  return (ab + b + a + 1) / 2 - 1;               // ceil((ab + b + a) / 2) - 1
}

ClosedFormInvariants familyClosedForms(const FamilyHVParams& p) {
  p.validate();
  ClosedFormInvariants cf{};
  cf.mu = 2LL * p.a + p.b + 1;
  cf.e = static_cast<long long>(p.a) * p.b + static_cast<long long>(p.b) * p.c +
         static_cast<long long>(p.a) * p.c;
  cf.e1 = 2LL * p.a + p.b;
  cf.e2 = 3;
  cf.lambda = familyPairLength(p.a, p.b) + familyPairLength(p.b, p.c) +
              familyPairLength(p.a, p.c) - p.a - p.b - p.c + 1;
  return cf;
}

std::pair<MonomialIdeal, ClosedFormInvariants> familyHV(const FamilyHVParams& p) {
  ClosedFormInvariants cf = familyClosedForms(p);
  MonomialIdeal base = MonomialIdeal::minimalize(
      {ExponentVector{p.a, 0, 0}, ExponentVector{0, p.b, 0}, ExponentVector{0, 0, p.c},
       ExponentVector{1, 1, 1}},
      3);
  return {integralClosure(base), cf};
}

FamilyDiff verifyFamily(const FamilyHVParams& p) {
  auto [ideal, cf] = familyHV(p);
  InvariantReport rep = report(ideal);

  FamilyDiff diff;
  auto expect = [&diff](const char* field, long long predicted, long long computed) {
    if (predicted == computed) return;
    diff.match = false;
    std::ostringstream msg;
    msg << field << ": closed form " << predicted << " vs engine " << computed;
    diff.mismatches.push_back(msg.str());
  };
  expect("mu", cf.mu, rep.mu);
  expect("e", cf.e, rep.multiplicity);
  expect("e1", cf.e1, rep.mixed.e[1]);
  expect("e2", cf.e2, rep.mixed.e[2]);
  expect("lambda", cf.lambda, rep.colength);
  return diff;
}

}  // namespace lech
