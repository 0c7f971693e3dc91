#include "lechlab/checkers.hpp"

#include <algorithm>
#include <cstdlib>

namespace lech {

namespace {

Outcome compareExact(const Rational& lhs, const Rational& rhs) {
  if (lhs < rhs) return Outcome::HoldsStrict;
  if (lhs == rhs) return Outcome::HoldsEqual;
  return Outcome::Fails;
}

InequalityVerdict exactVerdict(std::string name, Rational lhs, Rational rhs,
                               const InvariantReport& rep) {
  Outcome o = compareExact(lhs, rhs);
  return InequalityVerdict{std::move(name), o, BoundValue(std::move(lhs)), std::move(rhs), 0, rep};
}

InequalityVerdict skippedVerdict(std::string name, const InvariantReport& rep) {
  return InequalityVerdict{std::move(name), Outcome::Skipped, BoundValue(Rational(0)),
                           Rational(0), 0, rep};
}

bool isPowerOfM(const MonomialIdeal& ideal) {
  return ideal == MonomialIdeal::maximalPower(ideal.dim(), ideal.ord());
}

Rational dFactorialTimesLength(const InvariantReport& rep) {
  return Rational(factorialInt(rep.ideal.dim()) * rep.colength);
}

}  // namespace

const char* outcomeName(Outcome o) {
  switch (o) {
    case Outcome::HoldsStrict: return "HOLDS_STRICT";
    case Outcome::HoldsEqual: return "HOLDS_EQUAL";
    case Outcome::Fails: return "FAILS";
    case Outcome::Undecided: return "UNDECIDED";
    case Outcome::Skipped: return "SKIPPED";
  }
  return "UNKNOWN";
}

int defaultPrecisionCapBits() {
  if (const char* env = std::getenv("LECHLAB_PRECISION_BITS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 4096;
}

InequalityVerdict checkLech(const InvariantReport& rep) {
  return exactVerdict("lech", Rational(rep.multiplicity), dFactorialTimesLength(rep), rep);
}

InequalityVerdict checkQuestion11(const InvariantReport& rep, int precisionCapBits) {
  const int cap = precisionCapBits > 0 ? precisionCapBits : defaultPrecisionCapBits();
  const int d = rep.ideal.dim();
  const StirlingTable table = stirlingTable(d);
  const Integer e = rep.multiplicity;
  const Rational rhs = dFactorialTimesLength(rep);

  Integer root = inthRootFloor(e, d);
  if (ipow(root, d) == e) {
    Rational lhs(table.evalP(root));
    Outcome o = compareExact(lhs, rhs);
    return InequalityVerdict{"question-1.1", o, BoundValue(lhs), rhs, 0, rep};
  }

  // P(e^(1/d)) = e + sum_{i=1}^{d-1} s_i (e^(d-i))^(1/d); enclose each root
  // with outward rounding at the working precision, doubling up to the cap.
  // Coarse a-priori bounds, valid since 1 <= e^((d-i)/d) <= e: P(1) and e*P(1).
  Integer coeffSum = 0;
  for (int i = 0; i < d; ++i) coeffSum += table.s[i];
  BoundValue bounds(Rational(coeffSum), Rational(coeffSum * e));
  int bitsUsed = 0;
  for (int bits = 64; bits <= cap; bits *= 2) {
    bitsUsed = bits;
    const Integer scale = Integer(1) << bits;
    const Integer scaleD = ipow(scale, d);
    Rational lo(e), hi(e);
    for (int i = 1; i < d; ++i) {
      Integer approx = inthRootFloor(ipow(e, d - i) * scaleD, d);
      lo += Rational(table.s[i] * approx, scale);
      hi += Rational(table.s[i] * (approx + 1), scale);
    }
    bounds = BoundValue(lo, hi);
    if (hi < rhs)
      return InequalityVerdict{"question-1.1", Outcome::HoldsStrict, bounds, rhs, bits, rep};
    if (lo > rhs)
      return InequalityVerdict{"question-1.1", Outcome::Fails, bounds, rhs, bits, rep};
  }
  // Equality is impossible here (e is not a perfect d-th power), so reaching
  // the cap is an anomaly worth surfacing.
  return InequalityVerdict{"question-1.1", Outcome::Undecided, bounds, rhs, bitsUsed, rep};
}

InequalityVerdict checkLengthConj(const InvariantReport& rep) {
  const int d = rep.ideal.dim();
  const StirlingTable table = stirlingTable(d);
  Integer lhs = 0;
  for (int i = 0; i < d; ++i) lhs += table.s[i] * rep.mixed.e[i];
  return exactVerdict("length-conj", Rational(lhs), dFactorialTimesLength(rep), rep);
}

InequalityVerdict checkMIConj(const InvariantReport& rep) {
  return exactVerdict("mi-conj", Rational(rep.eOfMI), dFactorialTimesLength(rep), rep);
}

InequalityVerdict checkDim2Sharp(const InvariantReport& rep) {
  if (rep.ideal.dim() != 2) throw DomainError("dim2-sharp needs a 2-dimensional ideal");
  Rational rhs = Rational(2 * rep.colength - 2 * rep.ord + rInvariant(rep.closure));
  return exactVerdict("dim2-sharp", Rational(rep.multiplicity), std::move(rhs), rep);
}

Dim2EqualityResult checkDim2Equality(const InvariantReport& rep) {
  if (rep.ideal.dim() != 2) throw DomainError("dim2-equality needs a 2-dimensional ideal");
  if (!rep.isClosed) throw DomainError("dim2-equality needs an integrally closed ideal");
  Rational lhs = Rational(rep.multiplicity + rep.mixed.e[1]);
  Rational rhs = Rational(2 * rep.colength);
  bool pow = isPowerOfM(rep.ideal);
  Outcome o;
  if (lhs > rhs) {
    o = Outcome::Fails;
  } else {
    bool equal = lhs == rhs;
    o = (equal == pow) ? (equal ? Outcome::HoldsEqual : Outcome::HoldsStrict) : Outcome::Fails;
  }
  return {InequalityVerdict{"dim2-equality", o, BoundValue(std::move(lhs)), std::move(rhs), 0, rep},
          pow};
}

InequalityVerdict checkDim3(const InvariantReport& rep) {
  if (rep.ideal.dim() != 3) throw DomainError("dim3 needs a 3-dimensional ideal");
  Rational lhs = Rational(rep.multiplicity + 3 * rep.mixed.e[1] + 2 * rep.mixed.e[2]);
  Rational rhs = Rational(6 * rep.colength);
  Outcome o;
  if (lhs > rhs) {
    o = Outcome::Fails;
  } else if (lhs == rhs) {
    // Equality characterizes powers of m (and forces integral closedness).
    o = (rep.isClosed && isPowerOfM(rep.ideal)) ? Outcome::HoldsEqual : Outcome::Fails;
  } else {
    o = Outcome::HoldsStrict;
  }
  return InequalityVerdict{"dim3", o, BoundValue(std::move(lhs)), std::move(rhs), 0, rep};
}

InequalityVerdict checkMuConj(const InvariantReport& rep) {
  if (!rep.isClosed) return skippedVerdict("mu-conj", rep);
  const int d = rep.ideal.dim();
  const StirlingTable table = stirlingTable(d);
  Integer lhs = 0;
  for (int i = 1; i <= d; ++i) lhs += table.t[i] * rep.mixed.e[i];
  Rational rhs = Rational(factorialInt(d - 1) * rep.mu);
  return exactVerdict("mu-conj", Rational(lhs), std::move(rhs), rep);
}

InequalityVerdict checkProp74(const InvariantReport& rep) {
  const int d = rep.ideal.dim();
  if (d < 5) throw DomainError("prop74 needs dimension >= 5");
  if (!rep.isClosed) return skippedVerdict("prop74", rep);
  Integer lhs = 0;
  for (int i = 1; i <= d; ++i)
    lhs += ipow(Integer(2), i - 1) * binomialInt(d - 1, i - 1) * rep.mixed.e[i];
  Rational rhs = Rational(factorialInt(d - 1) * rep.mu);
  return exactVerdict("prop74", Rational(lhs), std::move(rhs), rep);
}

InequalityVerdict checkDaoSmirnov(const InvariantReport& rep) {
  if (!rep.isClosed) return skippedVerdict("dao-smirnov", rep);
  const int d = rep.ideal.dim();
  Rational rhs = Rational(factorialInt(d - 1) * (rep.mu - d + 1));
  return exactVerdict("dao-smirnov", Rational(rep.mixed.e[1]), std::move(rhs), rep);
}

std::vector<std::string> applicableChecks(int dim) {
  std::vector<std::string> names{"lech", "question-1.1", "length-conj", "mi-conj"};
  if (dim == 2) {
    names.push_back("dim2-sharp");
    names.push_back("dim2-equality");
  }
  if (dim == 3) names.push_back("dim3");
  if (dim >= 5) names.push_back("prop74");
  names.push_back("mu-conj");
  names.push_back("dao-smirnov");
  return names;
}

bool isKnownCheckName(const std::string& name) {
  static const std::vector<std::string> all{"lech",       "question-1.1", "length-conj",
                                            "mi-conj",    "dim2-sharp",   "dim2-equality",
                                            "dim3",       "mu-conj",      "prop74",
                                            "dao-smirnov"};
  return std::find(all.begin(), all.end(), name) != all.end();
}

InequalityVerdict runCheckByName(const std::string& name, const InvariantReport& rep) {
  const int d = rep.ideal.dim();
  if (name == "lech") return checkLech(rep);
  if (name == "question-1.1") return checkQuestion11(rep);
  if (name == "length-conj") return checkLengthConj(rep);
  if (name == "mi-conj") return checkMIConj(rep);
  if (name == "dim2-sharp")
    return d == 2 ? checkDim2Sharp(rep) : skippedVerdict("dim2-sharp", rep);
  if (name == "dim2-equality") {
    if (d != 2 || !rep.isClosed) return skippedVerdict("dim2-equality", rep);
    return checkDim2Equality(rep).verdict;
  }
  if (name == "dim3") return d == 3 ? checkDim3(rep) : skippedVerdict("dim3", rep);
  if (name == "mu-conj") return checkMuConj(rep);
  if (name == "prop74") return d >= 5 ? checkProp74(rep) : skippedVerdict("prop74", rep);
  if (name == "dao-smirnov") return checkDaoSmirnov(rep);
  throw DomainError("unknown check name: " + name);
}

std::vector<InequalityVerdict> checkAll(const InvariantReport& rep) {
  std::vector<InequalityVerdict> verdicts;
  for (const auto& name : applicableChecks(rep.ideal.dim()))
    verdicts.push_back(runCheckByName(name, rep));
  return verdicts;
}

bool isTheoremAt(const std::string& name, int dim) {
  if (name == "lech" || name == "dim2-sharp" || name == "dim2-equality" || name == "dim3" ||
      name == "dao-smirnov")
    return true;
  if (name == "mi-conj") return dim >= 4;
  if (name == "prop74") return dim >= 5;
  if (name == "length-conj") return dim <= 3;
  // question-1.1 and mu-conj stay open statements here.
  return false;
}

}  // namespace lech
