#ifndef LECHLAB_CHECKERS_HPP
#define LECHLAB_CHECKERS_HPP

#include "lechlab/invariants.hpp"
#include "lechlab/stirling.hpp"

#include <string>
#include <vector>

namespace lech {

enum class Outcome { HoldsStrict, HoldsEqual, Fails, Undecided, Skipped };

const char* outcomeName(Outcome o);

/// Certified enclosure lo <= value <= hi; exact values have lo == hi.
struct BoundValue {
  Rational lo, hi;
  BoundValue() = default;
  explicit BoundValue(Rational exact) : lo(exact), hi(std::move(exact)) {}
  BoundValue(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {}
  bool exact() const { return lo == hi; }
};

struct InequalityVerdict {
  std::string name;
  Outcome outcome = Outcome::Skipped;
  BoundValue lhs;
  Rational rhs = 0;
  int precisionBits = 0;  // nonzero only when interval refinement ran
  InvariantReport payload;
};

int defaultPrecisionCapBits();  // LECHLAB_PRECISION_BITS or 4096

/// e(I) <= d! lambda(R/I).
InequalityVerdict checkLech(const InvariantReport& rep);

/// P(e(I)^(1/d)) <= d! lambda(R/I); exact for perfect d-th powers, otherwise
/// outward-rounded interval refinement with doubling precision.
InequalityVerdict checkQuestion11(const InvariantReport& rep, int precisionCapBits = 0);

/// sum_{i<d} s_i e_i(m|I) <= d! lambda(R/I).
InequalityVerdict checkLengthConj(const InvariantReport& rep);

/// e(mI) <= d! lambda(R/I); a theorem for d >= 4 (strictly), fails at I = m
/// for d < 4.
InequalityVerdict checkMIConj(const InvariantReport& rep);

/// d = 2: e(I) <= 2 lambda - 2 ord(I) + r(closure).
InequalityVerdict checkDim2Sharp(const InvariantReport& rep);

/// d = 2, integrally closed: e + e_1 = 2 lambda iff I is a power of m.
/// FAILS encodes a violated iff, not just a violated inequality.
struct Dim2EqualityResult {
  InequalityVerdict verdict;
  bool isPowerOfM = false;
};
Dim2EqualityResult checkDim2Equality(const InvariantReport& rep);

/// d = 3: e + 3 e_1 + 2 e_2 <= 6 lambda, equality only at powers of m.
InequalityVerdict checkDim3(const InvariantReport& rep);

/// sum_{i>=1} t_i e_i(m|I) <= (d-1)! mu(I) for integrally closed I.
InequalityVerdict checkMuConj(const InvariantReport& rep);

/// d >= 5, integrally closed: sum 2^(i-1) binom(d-1,i-1) e_i <= (d-1)! mu(I).
InequalityVerdict checkProp74(const InvariantReport& rep);

/// e_1(m|I) <= (d-1)! (mu(I) - d + 1) for integrally closed I; an equality in
/// dimension two.
InequalityVerdict checkDaoSmirnov(const InvariantReport& rep);

/// Every checker applicable to the report's dimension; closedness-gated
/// checkers appear as SKIPPED when the ideal is not integrally closed.
std::vector<InequalityVerdict> checkAll(const InvariantReport& rep);

/// All check names, in the order checkAll would run them for this dimension.
std::vector<std::string> applicableChecks(int dim);

/// Dispatch by CLI name ("lech", "question-1.1", "length-conj", "mi-conj",
/// "dim2-sharp", "dim2-equality", "dim3", "mu-conj", "prop74", "dao-smirnov").
/// Returns a SKIPPED verdict when the check does not apply to the dimension.
InequalityVerdict runCheckByName(const std::string& name, const InvariantReport& rep);

bool isKnownCheckName(const std::string& name);

/// True when the named statement is a theorem at this dimension (a FAILS is a
/// bug), false when it is open (a FAILS is a reportable discovery).
bool isTheoremAt(const std::string& name, int dim);

}  // namespace lech

#endif
