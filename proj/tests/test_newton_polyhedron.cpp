#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lechlab/linear_feasibility.hpp"
#include "lechlab/newton_polyhedron.hpp"

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

bool hasFacet(const NewtonPolyhedron& np, std::vector<int> normal, int offset) {
  for (const auto& f : np.facets) {
    if (f.offset != offset) continue;
    bool same = true;
    for (int k = 0; k < np.dim; ++k) same &= f.normal[k] == normal[k];
    if (same) return true;
  }
  return false;
}

template <typename Fn>
void forEachPoint(const std::vector<int>& hi, Fn&& fn) {
  std::vector<int> v(hi.size(), 0);
  while (true) {
    fn(v);
    int k = static_cast<int>(hi.size()) - 1;
    while (k >= 0 && v[k] == hi[k]) v[k--] = 0;
    if (k < 0) return;
    ++v[k];
  }
}

}  // namespace

TEST_CASE("facets of simple hulls") {
  auto np1 = buildPolyhedron(makeIdeal({{3, 0}, {0, 3}}, 2));
  CHECK(hasFacet(np1, {1, 1}, 3));

  for (int d = 2; d <= 4; ++d)
    for (int n = 1; n <= 3; ++n) {
      auto np = buildPolyhedron(MonomialIdeal::maximalPower(d, n));
      CHECK(hasFacet(np, std::vector<int>(d, 1), n));
    }

  auto np2 = buildPolyhedron(makeIdeal({{4, 0}, {0, 2}}, 2));
  CHECK(hasFacet(np2, {1, 2}, 4));
}

TEST_CASE("polyhedron structural invariants") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 3);
    auto ideal = randomMPrimary(rng, dim, 5);
    auto np = buildPolyhedron(ideal);

    for (const auto& f : np.facets) {
      Integer g = f.offset;
      for (const auto& c : f.normal) {
        CHECK(c >= 0);
        g = boost::multiprecision::gcd(g, c);
      }
      Integer normGcd = 0;
      for (const auto& c : f.normal) normGcd = boost::multiprecision::gcd(normGcd, c);
      CHECK(normGcd == 1);  // primitive normal
    }
    // Every generator satisfies every facet; vertices are generators.
    for (const auto& g : ideal.gens()) CHECK(npMembership(np, g));
    CHECK(!np.vertices.empty());
    for (const auto& v : np.vertices) {
      int tight = 0;
      for (const auto& f : np.facets) {
        Integer s = 0;
        for (int k = 0; k < dim; ++k) s += f.normal[k] * v[k];
        CHECK(s >= f.offset);
        if (s == f.offset) ++tight;
      }
      CHECK(tight >= dim);
    }
  }
}

TEST_CASE("membership: facet route equals the feasibility route") {
  auto np3 = buildPolyhedron(MonomialIdeal::maximalPower(2, 3));
  CHECK(npMembership(np3, ExponentVector{1, 2}));
  auto npCube = buildPolyhedron(makeIdeal({{3, 0}, {0, 3}}, 2));
  CHECK(!npMembership(npCube, ExponentVector{1, 1}));
  auto np42 = buildPolyhedron(makeIdeal({{4, 0}, {0, 2}}, 2));
  CHECK(npMembership(np42, ExponentVector{2, 1}));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 3);
    auto ideal = randomMPrimary(rng, dim, 4);
    auto np = buildPolyhedron(ideal);
    std::vector<int> box = ideal.purePowers();
    forEachPoint(box, [&](const std::vector<int>& v) {
      ExponentVector p(v);
      CHECK(npMembership(np, p) == dominatesConvexCombination(ideal.gens(), p));
    });
  }
}

TEST_CASE("rational membership") {
  auto np = buildPolyhedron(makeIdeal({{4, 0}, {0, 2}}, 2));
  CHECK(npMembership(np, std::vector<Rational>{Rational(2), Rational(1)}));
  CHECK(npMembership(np, std::vector<Rational>{Rational(7, 2), Rational(1, 4)}));
  CHECK(!npMembership(np, std::vector<Rational>{Rational(3), Rational(1, 4)}));
  CHECK(!npMembership(np, std::vector<Rational>{Rational(-1), Rational(5)}));
  CHECK_THROWS_AS(npMembership(np, ExponentVector{1, 1, 1}), DomainError);
}

TEST_CASE("integral closure of known ideals") {
  auto c1 = integralClosure(makeIdeal({{3, 0}, {0, 3}}, 2));
  CHECK(c1 == MonomialIdeal::maximalPower(2, 3));
  CHECK(c1.mu() == 4);

  for (int d = 2; d <= 4; ++d)
    for (int n = 1; n <= 3; ++n) {
      auto mn = MonomialIdeal::maximalPower(d, n);
      CHECK(integralClosure(mn) == mn);
    }

  // Independent oracle: lattice points with <(1,2), v> >= 4, minimalized.
  auto i = makeIdeal({{4, 0}, {0, 2}}, 2);
  std::vector<ExponentVector> oracle;
  forEachPoint({4, 2}, [&](const std::vector<int>& v) {
    if (v[0] + 2 * v[1] >= 4) oracle.emplace_back(v);
  });
  CHECK(integralClosure(i) == MonomialIdeal::minimalize(oracle, 2));
  CHECK(integralClosure(i) == makeIdeal({{4, 0}, {2, 1}, {0, 2}}, 2));
}

TEST_CASE("isIntegrallyClosed") {
  CHECK(isIntegrallyClosed(MonomialIdeal::maximalPower(3, 2)));
  CHECK(!isIntegrallyClosed(makeIdeal({{3, 0}, {0, 3}}, 2)));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 3);
    auto closure = integralClosure(randomMPrimary(rng, dim, 4));
    CHECK(isIntegrallyClosed(closure));  // idempotence
  }
}

TEST_CASE("closure is inclusion-monotone") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 3);
    auto small = randomMPrimary(rng, dim, 4);
    auto big = sum(small, randomMPrimary(rng, dim, 4));
    CHECK(integralClosure(big).containsIdeal(integralClosure(small)));
  }
}

TEST_CASE("feasibility-only path for d = 5 and d = 6") {
  auto m = MonomialIdeal::maximal(5);
  CHECK(integralClosure(m) == m);
  auto m2 = MonomialIdeal::maximalPower(5, 2);
  CHECK(integralClosure(m2) == m2);
  auto open5 = makeIdeal({{2, 0, 0, 0, 0},
                          {0, 2, 0, 0, 0},
                          {0, 0, 2, 0, 0},
                          {0, 0, 0, 2, 0},
                          {0, 0, 0, 0, 2}},
                         5);
  CHECK(integralClosure(open5) == MonomialIdeal::maximalPower(5, 2));
  CHECK_THROWS_AS(buildPolyhedron(open5), DomainError);
  CHECK_THROWS_AS(covolume(open5), DomainError);

  auto m6sq = MonomialIdeal::maximalPower(6, 2);
  CHECK(integralClosure(m6sq) == m6sq);
}

TEST_CASE("covolume of known regions") {
  for (int n = 1; n <= 4; ++n)
    CHECK(covolume(MonomialIdeal::maximalPower(2, n)) == Rational(n * n, 2));
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      CHECK(covolume(makeIdeal({{a, 0}, {0, b}}, 2)) == Rational(a * b, 2));

  auto hv = makeIdeal({{3, 0, 0}, {0, 4, 0}, {0, 0, 5}, {1, 1, 1}}, 3);
  CHECK(covolume(hv) == Rational(47, 6));

  CHECK(covolume(makeIdeal({{4}}, 1)) == Rational(4));
}

TEST_CASE("covolume scales like n^d under powers") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 12; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 2);
    auto ideal = randomMPrimary(rng, dim, 4);
    Rational base = covolume(ideal);
    for (int n = 1; n <= 3; ++n)
      CHECK(covolume(power(ideal, n)) == base * ipow(Integer(n), dim));
  }
}

TEST_CASE("covolume is invariant under integral closure; d! covolume integral") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 3);
    auto ideal = randomMPrimary(rng, dim, 4);
    Rational cv = covolume(ideal);
    CHECK(cv == covolume(integralClosure(ideal)));
    Rational scaled = cv * Rational(factorialInt(dim));
    CHECK(denominator(scaled) == 1);
    CHECK(numerator(scaled) > 0);
    CHECK(integralClosure(ideal).ord() == ideal.ord());
  }
}

TEST_CASE("not-m-primary ideals are rejected") {
  auto bad = makeIdeal({{2, 0}, {1, 1}}, 2);
  CHECK_THROWS_AS(buildPolyhedron(bad), DomainError);
  CHECK_THROWS_AS(integralClosure(bad), DomainError);
  CHECK_THROWS_AS(covolume(bad), DomainError);
}
