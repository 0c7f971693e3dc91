#include "lechlab/newton_polyhedron.hpp"

#include "lechlab/linear_feasibility.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lech {

namespace {

constexpr int kFacetDimCap = 4;

void requireMPrimary(const MonomialIdeal& ideal) {
  if (ideal.isUnit()) throw DomainError("unit ideal rejected");
  if (!ideal.isMPrimary())
    throw DomainError("ideal is not m-primary: Newton polyhedron complement is unbounded");
}

// Iterates lattice points of the closed box [0, hi_1] x ... x [0, hi_d].
template <typename Fn>
void forEachBoxPoint(const std::vector<int>& hi, Fn&& fn) {
  std::vector<int> v(hi.size(), 0);
  while (true) {
    fn(v);
    size_t k = 0;
    while (k < v.size() && v[k] == hi[k]) v[k++] = 0;
    if (k == v.size()) return;
    ++v[k];
  }
}

bool satisfiesFacets(const NewtonPolyhedron& np, const std::vector<int>& v) {
  for (const auto& f : np.facets) {
    Integer s = 0;
    for (int k = 0; k < np.dim; ++k) s += f.normal[k] * v[k];
    if (s < f.offset) return false;
  }
  return true;
}

// --- exact volume of NP(I) within the pure-power box ------------------------

struct HomogVertex {
  IntVec x;   // numerators, length d
  Integer t;  // positive denominator
  std::vector<std::uint64_t> tightBits;

  bool isTight(size_t row) const { return (tightBits[row >> 6] >> (row & 63)) & 1; }
};

bool lexLessRational(const HomogVertex& a, const HomogVertex& b) {
  for (size_t k = 0; k < a.x.size(); ++k) {
    Integer lhs = a.x[k] * b.t, rhs = b.x[k] * a.t;
    if (lhs != rhs) return lhs < rhs;
  }
  return false;
}

// Affine dimension of a vertex subset (rank of homogeneous differences).
int affineDim(const std::vector<HomogVertex>& verts, const std::vector<int>& idx) {
  if (idx.empty()) return -1;
  const auto& v0 = verts[idx[0]];
  IntMat rows;
  for (size_t i = 1; i < idx.size(); ++i) {
    const auto& vi = verts[idx[i]];
    IntVec row(v0.x.size());
    for (size_t k = 0; k < v0.x.size(); ++k) row[k] = vi.x[k] * v0.t - v0.x[k] * vi.t;
    rows.push_back(std::move(row));
  }
  return rows.empty() ? 0 : intRank(std::move(rows));
}

class FanTriangulator {
 public:
  FanTriangulator(const std::vector<HomogVertex>& verts, size_t rowCount)
      : verts_(verts), rowCount_(rowCount) {}

  // Simplices (as vertex index tuples) of the k-face spanned by idx.
  const std::vector<std::vector<int>>& triangulate(std::vector<int> idx, int k) {
    std::sort(idx.begin(), idx.end());
    auto it = cache_.find(idx);
    if (it != cache_.end()) return it->second;

    std::vector<std::vector<int>> simplices;
    if (static_cast<int>(idx.size()) == k + 1) {
      simplices.push_back(idx);
      return cache_.emplace(std::move(idx), std::move(simplices)).first->second;
    }

    int apex = idx[0];
    for (int i : idx)
      if (lexLessRational(verts_[i], verts_[apex])) apex = i;

    std::set<std::vector<int>> subfaces;
    for (size_t r = 0; r < rowCount_; ++r) {
      std::vector<int> w;
      for (int i : idx)
        if (verts_[i].isTight(r)) w.push_back(i);
      if (w.size() == idx.size() || static_cast<int>(w.size()) < k) continue;
      if (affineDim(verts_, w) == k - 1) subfaces.insert(std::move(w));
    }

    for (const auto& face : subfaces) {
      if (std::binary_search(face.begin(), face.end(), apex)) continue;
      for (const auto& s : triangulate(face, k - 1)) {
        std::vector<int> simplex = s;
        simplex.push_back(apex);
        std::sort(simplex.begin(), simplex.end());
        simplices.push_back(std::move(simplex));
      }
    }
    return cache_.emplace(std::move(idx), std::move(simplices)).first->second;
  }

 private:
  const std::vector<HomogVertex>& verts_;
  size_t rowCount_;
  std::map<std::vector<int>, std::vector<std::vector<int>>> cache_;
};

Rational simplexVolume(const std::vector<HomogVertex>& verts, const std::vector<int>& s, int d) {
  const auto& v0 = verts[s[0]];
  IntMat rows;
  Integer denom = ipow(v0.t, d);
  for (int i = 1; i <= d; ++i) {
    const auto& vi = verts[s[i]];
    IntVec row(d);
    for (int k = 0; k < d; ++k) row[k] = vi.x[k] * v0.t - v0.x[k] * vi.t;
    rows.push_back(std::move(row));
    denom *= vi.t;
  }
  Integer det = intDet(std::move(rows));
  if (det < 0) det = -det;
  return Rational(det, denom * factorialInt(d));
}

}  // namespace

NewtonPolyhedron buildPolyhedron(const MonomialIdeal& ideal) {
  requireMPrimary(ideal);
  const int d = ideal.dim();
  if (d > kFacetDimCap)
    throw DomainError("facet enumeration is capped at d <= 4; use the feasibility path");

  // Dual cone of the homogenization: rows (g, 1) for generators, (e_k, 0) for
  // the recession rays. Extreme rays (n, -c) are the facets <n, x> >= c.
  IntMat rows;
  for (const auto& g : ideal.gens()) {
    IntVec row(d + 1);
    for (int k = 0; k < d; ++k) row[k] = g[k];
    row[d] = 1;
    rows.push_back(std::move(row));
  }
  for (int k = 0; k < d; ++k) {
    IntVec row(d + 1, 0);
    row[k] = 1;
    rows.push_back(std::move(row));
  }

  NewtonPolyhedron np;
  np.dim = d;
  np.sourceGens = ideal.gens();
  for (const auto& ray : extremeRays(rows)) {
    bool zeroNormal = std::all_of(ray.v.begin(), ray.v.end() - 1,
                                  [](const Integer& x) { return x == 0; });
    if (zeroNormal) continue;  // the trivial t >= 0 facet of the homogenization
    Facet f;
    f.normal.assign(ray.v.begin(), ray.v.end() - 1);
    f.offset = -ray.v.back();
    np.facets.push_back(std::move(f));
  }

  // Vertices are the generators whose tight facets span the full dimension.
  for (const auto& g : ideal.gens()) {
    IntMat tight;
    for (const auto& f : np.facets) {
      Integer s = 0;
      for (int k = 0; k < d; ++k) s += f.normal[k] * g[k];
      if (s == f.offset) tight.push_back(f.normal);
    }
    if (!tight.empty() && intRank(std::move(tight)) == d) np.vertices.push_back(g);
  }
  return np;
}

bool npMembership(const NewtonPolyhedron& np, const ExponentVector& v) {
  if (v.dim() != np.dim) throw DomainError("point dimension mismatch");
  for (int k = 0; k < np.dim; ++k)
    if (v[k] < 0) return false;
  std::vector<int> coords = v.coords();
  return satisfiesFacets(np, coords);
}

bool npMembership(const NewtonPolyhedron& np, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != np.dim) throw DomainError("point dimension mismatch");
  for (const auto& c : v)
    if (c < 0) return false;
  for (const auto& f : np.facets) {
    Rational s = 0;
    for (int k = 0; k < np.dim; ++k) s += Rational(f.normal[k]) * v[k];
    if (s < Rational(f.offset)) return false;
  }
  return true;
}

MonomialIdeal integralClosure(const MonomialIdeal& ideal) {
  requireMPrimary(ideal);
  const int d = ideal.dim();
  std::vector<int> box = ideal.purePowers();

  std::vector<ExponentVector> inside;
  if (d <= kFacetDimCap) {
    NewtonPolyhedron np = buildPolyhedron(ideal);
    forEachBoxPoint(box, [&](const std::vector<int>& v) {
      if (satisfiesFacets(np, v)) inside.emplace_back(v);
    });
  } else {
    const auto& gens = ideal.gens();
    forEachBoxPoint(box, [&](const std::vector<int>& v) {
      ExponentVector p(v);
      if (ideal.contains(p) || dominatesConvexCombination(gens, p)) inside.push_back(std::move(p));
    });
  }
  return MonomialIdeal::minimalize(std::move(inside), d);
}

bool isIntegrallyClosed(const MonomialIdeal& ideal) { return integralClosure(ideal) == ideal; }

Rational covolume(const MonomialIdeal& ideal) {
  requireMPrimary(ideal);
  const int d = ideal.dim();
  std::vector<int> box = ideal.purePowers();
  if (d == 1) return Rational(box[0]);
  if (d > kFacetDimCap) throw DomainError("covolume needs the facet path (d <= 4)");

  NewtonPolyhedron np = buildPolyhedron(ideal);

  // Vertex enumeration of Q = NP(I) intersected with the box, homogenized.
  IntMat rows;
  for (const auto& f : np.facets) {
    IntVec row(d + 1);
    for (int k = 0; k < d; ++k) row[k] = f.normal[k];
    row[d] = -f.offset;
    rows.push_back(std::move(row));
  }
  for (int k = 0; k < d; ++k) {
    IntVec lower(d + 1, 0), upper(d + 1, 0);
    lower[k] = 1;
    upper[k] = -1;
    upper[d] = box[k];
    rows.push_back(std::move(lower));
    rows.push_back(std::move(upper));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  std::vector<HomogVertex> verts;
  for (auto& ray : extremeRays(rows)) {
    if (ray.v.back() <= 0)
      throw InternalError("unbounded direction in the clipped Newton polyhedron");
    HomogVertex hv;
    hv.x.assign(ray.v.begin(), ray.v.end() - 1);
    hv.t = ray.v.back();
    hv.tightBits = std::move(ray.tightBits);
    verts.push_back(std::move(hv));
  }

  std::vector<int> all(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) all[i] = static_cast<int>(i);
  if (affineDim(verts, all) != d)
    throw InternalError("clipped Newton polyhedron is not full-dimensional");

  FanTriangulator tri(verts, rows.size());
  Rational vol = 0;
  for (const auto& s : tri.triangulate(all, d)) vol += simplexVolume(verts, s, d);

  Rational boxVol = 1;
  for (int k = 0; k < d; ++k) boxVol *= box[k];
  Rational covol = boxVol - vol;

  Rational scaled = covol * Rational(factorialInt(d));
  if (denominator(scaled) != 1 || numerator(scaled) <= 0)
    throw InternalError("d! * covolume is not a positive integer: hull or volume bug");
  return covol;
}

}  // namespace lech
