#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lechlab/checkers.hpp"
#include "lechlab/family.hpp"
#include "lechlab/json_io.hpp"

#include <random>

using namespace lech;

namespace {

MonomialIdeal makeIdeal(std::vector<std::vector<int>> pts, int dim) {
  std::vector<ExponentVector> gens;
  for (auto& p : pts) gens.emplace_back(std::move(p));
  return MonomialIdeal::minimalize(std::move(gens), dim);
}

MonomialIdeal randomMPrimary(std::mt19937_64& rng, int dim, int maxExp) {
  std::vector<ExponentVector> pts;
  for (int k = 0; k < dim; ++k)
    pts.push_back(ExponentVector::unit(dim, k, 1 + static_cast<int>(rng() % maxExp)));
  int extra = static_cast<int>(rng() % 5);
  for (int i = 0; i < extra; ++i) {
    std::vector<int> v(dim);
    for (int k = 0; k < dim; ++k) v[k] = static_cast<int>(rng() % (maxExp + 1));
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) continue;
    pts.emplace_back(std::move(v));
  }
  return MonomialIdeal::minimalize(std::move(pts), dim);
}

long long llpow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

long long binom(int n, int k) { return static_cast<long long>(binomialInt(n, k)); }

// Report of m^n assembled from the closed forms; lets checker arithmetic be
// exercised at dimensions the polyhedral engine does not serve.
InvariantReport trivialPowerReport(int d, int n) {
  auto ideal = MonomialIdeal::maximalPower(d, n);
  MixedMultiplicityVector mixed;
  mixed.dim = d;
  for (int i = 0; i <= d; ++i) mixed.e.push_back(llpow(n, d - i));
  return InvariantReport{ideal,
                         ideal,
                         true,
                         binom(n + d - 1, d),
                         llpow(n, d),
                         static_cast<int>(binom(n + d - 1, d - 1)),
                         n,
                         n,
                         mixed,
                         llpow(n + 1, d)};
}

InvariantReport hvReport(int a, int b, int c) {
  return report(familyHV(FamilyHVParams{a, b, c}).first);
}

}  // namespace

TEST_CASE("Stirling tables") {
  auto t4 = stirlingTable(4);
  CHECK(t4.s == std::vector<Integer>{1, 6, 11, 6});
  auto t3 = stirlingTable(3);
  CHECK(t3.t == std::vector<Integer>{0, 1, 3, 2});
  auto t1 = stirlingTable(1);
  CHECK(t1.s == std::vector<Integer>{1});

  for (int d = 1; d <= 8; ++d) {
    auto table = stirlingTable(d);
    for (int n = 1; n <= 2 * d; ++n) {
      Integer direct = 1;
      for (int j = 0; j < d; ++j) direct *= (n + j);
      CHECK(table.evalP(n) == direct);
      if (d >= 2) CHECK(table.evalQ(n) * n == direct);
    }
    for (int i = 1; i <= d; ++i) CHECK(table.t[i] == table.s[i - 1]);
  }
  CHECK_THROWS_AS(stirlingTable(0), DomainError);
  CHECK_THROWS_AS(stirlingTable(9), DomainError);
}

TEST_CASE("Lech inequality checker") {
  auto vm = checkLech(report(MonomialIdeal::maximal(3)));
  CHECK(vm.outcome == Outcome::HoldsStrict);  // 1 < 3!
  CHECK(vm.lhs.lo == 1);
  CHECK(vm.rhs == 6);

  for (int n = 1; n <= 4; ++n) {
    auto v = checkLech(report(MonomialIdeal::maximalPower(2, n)));
    CHECK(v.outcome == Outcome::HoldsStrict);  // n^2 < n^2 + n
    CHECK(v.lhs.lo == n * n);
    CHECK(v.rhs == n * n + n);
  }

  auto v345 = checkLech(hvReport(3, 4, 5));
  CHECK(v345.lhs.lo == 47);
  CHECK(v345.rhs == 138);
  CHECK(v345.outcome == Outcome::HoldsStrict);
}

TEST_CASE("root-polynomial checker: equality at powers of m") {
  for (int d = 2; d <= 4; ++d)
    for (int n = 1; n <= 3; ++n) {
      auto v = checkQuestion11(report(MonomialIdeal::maximalPower(d, n)));
      CHECK(v.outcome == Outcome::HoldsEqual);
      CHECK(v.precisionBits == 0);  // perfect-power fast path
      CHECK(v.lhs.exact());
    }
}

TEST_CASE("root-polynomial checker: certified interval on the family") {
  auto v = checkQuestion11(hvReport(3, 4, 5));
  CHECK(v.outcome == Outcome::HoldsStrict);
  CHECK(v.precisionBits >= 64);
  CHECK(!v.lhs.exact());
  // 47^(1/3) lies in (3.60, 3.61), so the sum sits just above 93.
  CHECK(v.lhs.lo > 93);
  CHECK(v.lhs.hi < 94);
  CHECK(v.rhs == 138);
}

TEST_CASE("root-polynomial checker: undecided only at an exhausted cap") {
  auto v = checkQuestion11(hvReport(3, 4, 5), 32);  // cap below the first pass
  CHECK(v.outcome == Outcome::Undecided);
  // The reported enclosure stays honest even without a refinement pass.
  CHECK(v.lhs.lo <= 94);
  CHECK(v.lhs.hi >= 93);
}

TEST_CASE("Stirling mixed-multiplicity bound") {
  for (int d = 2; d <= 4; ++d)
    for (int n = 1; n <= 3; ++n) {
      auto rep = report(MonomialIdeal::maximalPower(d, n));
      auto v = checkLengthConj(rep);
      CHECK(v.outcome == Outcome::HoldsEqual);
      CHECK(Rational(stirlingTable(d).evalP(n)) == v.lhs.lo);
      CHECK(v.rhs == Rational(factorialInt(d) * rep.colength));
    }

  auto v2 = checkLengthConj(report(MonomialIdeal::maximal(2)));
  CHECK(v2.outcome == Outcome::HoldsEqual);  // 1 + 1 = 2 * 1

  auto v345 = checkLengthConj(hvReport(3, 4, 5));
  CHECK(v345.lhs.lo == 83);  // 47 + 3*10 + 2*3
  CHECK(v345.rhs == 138);
  CHECK(v345.outcome == Outcome::HoldsStrict);
}

TEST_CASE("e(mI) bound across dimensions") {
  auto v4 = checkMIConj(trivialPowerReport(4, 1));
  CHECK(v4.lhs.lo == 16);
  CHECK(v4.rhs == 24);
  CHECK(v4.outcome == Outcome::HoldsStrict);
  CHECK(checkMIConj(report(MonomialIdeal::maximal(4))).outcome == Outcome::HoldsStrict);

  auto v3 = checkMIConj(report(MonomialIdeal::maximal(3)));
  CHECK(v3.lhs.lo == 8);
  CHECK(v3.rhs == 6);
  CHECK(v3.outcome == Outcome::Fails);

  auto v2 = checkMIConj(report(MonomialIdeal::maximal(2)));
  CHECK(v2.lhs.lo == 4);
  CHECK(v2.rhs == 2);
  CHECK(v2.outcome == Outcome::Fails);
}

TEST_CASE("dimension-2 sharp bound") {
  for (int n = 1; n <= 4; ++n) {
    auto v = checkDim2Sharp(report(MonomialIdeal::maximalPower(2, n)));
    CHECK(v.outcome == Outcome::HoldsEqual);  // n^2 = (n^2+n) - 2n + n
  }

  auto v33 = checkDim2Sharp(report(makeIdeal({{3, 0}, {0, 3}}, 2)));
  CHECK(v33.lhs.lo == 9);
  CHECK(v33.rhs == 15);  // 2*9 - 2*3 + r(m^3) = 18 - 6 + 3
  CHECK(v33.outcome == Outcome::HoldsStrict);

  auto closed = makeIdeal({{4, 0}, {2, 1}, {0, 2}}, 2);
  auto vc = checkDim2Sharp(report(closed));
  CHECK(vc.outcome != Outcome::Fails);

  CHECK_THROWS_AS(checkDim2Sharp(report(MonomialIdeal::maximal(3))), DomainError);
}

TEST_CASE("dimension-2 equality characterization") {
  auto vm5 = checkDim2Equality(report(MonomialIdeal::maximalPower(2, 5)));
  CHECK(vm5.verdict.outcome == Outcome::HoldsEqual);
  CHECK(vm5.isPowerOfM);

  // e = 8, e_1 = ord = 2, lambda = 6: strictly below 2*lambda, not a power.
  auto closed = makeIdeal({{4, 0}, {2, 1}, {0, 2}}, 2);
  auto rep = report(closed);
  CHECK(rep.isClosed);
  CHECK(rep.multiplicity == 8);
  CHECK(rep.colength == 6);
  CHECK(rep.mixed.e[1] == 2);
  auto vc = checkDim2Equality(rep);
  CHECK(vc.verdict.outcome == Outcome::HoldsStrict);
  CHECK(!vc.isPowerOfM);
  CHECK(vc.verdict.lhs.lo == 10);
  CHECK(vc.verdict.rhs == 12);

  auto diag = integralClosure(makeIdeal({{3, 0}, {1, 1}, {0, 3}}, 2));
  auto vd = checkDim2Equality(report(diag));
  bool pow = diag == MonomialIdeal::maximalPower(2, diag.ord());
  CHECK(vd.isPowerOfM == pow);
  CHECK((vd.verdict.outcome == Outcome::HoldsEqual) == pow);
  CHECK(vd.verdict.outcome != Outcome::Fails);

  CHECK_THROWS_AS(checkDim2Equality(report(makeIdeal({{3, 0}, {0, 3}}, 2))), DomainError);
}

TEST_CASE("exhaustive d=2 closed suite: equality exactly at powers of m") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    auto ideal = integralClosure(randomMPrimary(rng, 2, 5));
    auto res = checkDim2Equality(report(ideal));
    CHECK(res.verdict.outcome != Outcome::Fails);
  }
}

TEST_CASE("dimension-3 bound") {
  for (int n = 1; n <= 3; ++n) {
    auto v = checkDim3(report(MonomialIdeal::maximalPower(3, n)));
    CHECK(v.outcome == Outcome::HoldsEqual);
  }
  auto v345 = checkDim3(hvReport(3, 4, 5));
  CHECK(v345.lhs.lo == 83);
  CHECK(v345.rhs == 138);
  CHECK(v345.outcome == Outcome::HoldsStrict);

  auto v333 = checkDim3(hvReport(3, 3, 3));
  CHECK(v333.outcome == Outcome::HoldsEqual);  // the family triple (3,3,3) is m^3

  CHECK_THROWS_AS(checkDim3(report(MonomialIdeal::maximal(2))), DomainError);
}

TEST_CASE("generator-count bound") {
  auto v333 = checkMuConj(hvReport(3, 3, 3));
  CHECK(v333.lhs.lo == 20);  // 9 + 3*3 + 2*1
  CHECK(v333.rhs == 20);     // 2 * 10
  CHECK(v333.outcome == Outcome::HoldsEqual);

  auto v334 = checkMuConj(hvReport(3, 3, 4));
  CHECK(v334.outcome == Outcome::HoldsEqual);  // equality iff a = b = 3

  auto v345 = checkMuConj(hvReport(3, 4, 5));
  CHECK(v345.lhs.lo == 21);
  CHECK(v345.rhs == 22);
  CHECK(v345.outcome == Outcome::HoldsStrict);

  for (int d = 2; d <= 4; ++d)
    for (int n = 1; n <= 3; ++n) {
      auto v = checkMuConj(report(MonomialIdeal::maximalPower(d, n)));
      CHECK(v.outcome == Outcome::HoldsEqual);
    }

  auto notClosed = report(makeIdeal({{3, 0}, {0, 3}}, 2));
  CHECK(checkMuConj(notClosed).outcome == Outcome::Skipped);
}

TEST_CASE("binomial generator bound at d >= 5") {
  auto v1 = checkProp74(trivialPowerReport(5, 1));
  CHECK(v1.lhs.lo == 81);  // sum 2^j C(4,j) = 3^4
  CHECK(v1.rhs == 120);    // 24 * 5
  CHECK(v1.outcome == Outcome::HoldsStrict);

  auto v2 = checkProp74(trivialPowerReport(5, 2));
  CHECK(v2.lhs.lo == 256);  // 2^4 * sum C(4,j)
  CHECK(v2.rhs == 360);     // 24 * 15
  CHECK(v2.outcome == Outcome::HoldsStrict);

  CHECK_THROWS_AS(checkProp74(trivialPowerReport(4, 1)), DomainError);
}

TEST_CASE("full d = 5 reports stay out of reach of the asymptotics budget") {
  // The s = d interpolation row needs lambda((m^6)^n) on ~48^5 cells; the
  // engine refuses rather than grind, which keeps prop74 an experimental
  // closed-form-only check at d = 5.
  CHECK_THROWS_AS(report(MonomialIdeal::maximal(5), MultiplicityMethod::Asymptotics),
                  NotStabilized);
}

TEST_CASE("Dao-Smirnov bound") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 25; ++trial) {
    auto ideal = integralClosure(randomMPrimary(rng, 2, 6));
    auto v = checkDaoSmirnov(report(ideal));
    CHECK(v.outcome == Outcome::HoldsEqual);  // mu - 1 = e_1 in dimension two
  }

  auto v345 = checkDaoSmirnov(hvReport(3, 4, 5));
  CHECK(v345.lhs.lo == 10);
  CHECK(v345.rhs == 18);
  CHECK(v345.outcome == Outcome::HoldsStrict);

  CHECK(checkDaoSmirnov(report(MonomialIdeal::maximal(2))).outcome == Outcome::HoldsEqual);
  CHECK(checkDaoSmirnov(report(MonomialIdeal::maximal(3))).outcome == Outcome::HoldsStrict);
  CHECK(checkDaoSmirnov(report(MonomialIdeal::maximal(4))).outcome == Outcome::HoldsStrict);

  auto notClosed = report(makeIdeal({{3, 0}, {0, 3}}, 2));
  CHECK(checkDaoSmirnov(notClosed).outcome == Outcome::Skipped);
}

TEST_CASE("checkAll composes the applicable checkers") {
  auto verdictsM3 = checkAll(report(MonomialIdeal::maximal(3)));
  CHECK(verdictsM3.size() == 7);  // lech, q11, length, mi, dim3, mu, dao
  int fails = 0;
  for (const auto& v : verdictsM3) fails += v.outcome == Outcome::Fails;
  CHECK(fails == 1);  // only mi-conj fails at I = m in d = 3

  auto verdictsM2 = checkAll(report(MonomialIdeal::maximalPower(2, 2)));
  CHECK(verdictsM2.size() == 8);
  for (const auto& v : verdictsM2)
    if (v.name != "mi-conj") CHECK(v.outcome != Outcome::Fails);

  auto verdicts345 = checkAll(hvReport(3, 4, 5));
  for (const auto& v : verdicts345) {
    CHECK(v.outcome != Outcome::Fails);
    CHECK(v.outcome != Outcome::Undecided);
  }

  auto notClosed = report(makeIdeal({{3, 0}, {0, 3}}, 2));
  for (const auto& v : checkAll(notClosed))
    if (v.name == "mu-conj" || v.name == "dao-smirnov" || v.name == "dim2-equality")
      CHECK(v.outcome == Outcome::Skipped);
}

TEST_CASE("verdicts are bit-reproducible") {
  auto rep = hvReport(3, 4, 5);
  for (const auto& name : applicableChecks(3)) {
    auto a = verdictToJson(runCheckByName(name, rep)).dump();
    auto b = verdictToJson(runCheckByName(name, rep)).dump();
    CHECK(a == b);
  }
}

TEST_CASE("the root bound dominates the Stirling bound when both decide") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 2);
    auto rep = report(randomMPrimary(rng, dim, 5));
    auto q = checkQuestion11(rep);
    auto l = checkLengthConj(rep);
    if (q.outcome == Outcome::HoldsStrict || q.outcome == Outcome::HoldsEqual)
      CHECK((l.outcome == Outcome::HoldsStrict || l.outcome == Outcome::HoldsEqual));
  }
}

TEST_CASE("report JSON carries exactly the schema fields, in order") {
  auto j = reportToJson(hvReport(3, 4, 5));
  std::vector<std::string> keys;
  for (auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"dim", "gens", "isClosed", "colength", "multiplicity",
                                         "mu", "ord", "r", "mixed", "eOfMI"});
  CHECK(j["dim"] == 3);
  CHECK(j["colength"] == 23);
  CHECK(j["mixed"] == std::vector<long long>{47, 10, 3, 1});
}

TEST_CASE("verdict JSON carries exactly the schema fields") {
  auto j = verdictToJson(checkLech(hvReport(3, 4, 5)));
  std::vector<std::string> keys;
  for (auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys ==
        std::vector<std::string>{"name", "outcome", "lhs", "rhs", "precisionBits", "ideal"});
  CHECK(j["lhs"] == "47");
  CHECK(j["rhs"] == "138");
}

TEST_CASE("polyhedron debug JSON lists facets as [normal..., offset]") {
  auto np = buildPolyhedron(makeIdeal({{4, 0}, {0, 2}}, 2));
  auto j = polyhedronToJson(np);
  bool found = false;
  for (const auto& f : j["facets"])
    if (f == std::vector<std::string>{"1", "2", "4"}) found = true;
  CHECK(found);
  CHECK(j["vertices"].size() == 2);
}

TEST_CASE("theorem-vs-open classification") {
  CHECK(isTheoremAt("lech", 4));
  CHECK(isTheoremAt("mi-conj", 4));
  CHECK(!isTheoremAt("mi-conj", 3));
  CHECK(isTheoremAt("length-conj", 3));
  CHECK(!isTheoremAt("length-conj", 4));
  CHECK(!isTheoremAt("question-1.1", 2));
  CHECK(!isTheoremAt("mu-conj", 3));
  CHECK(isTheoremAt("dao-smirnov", 3));
}
