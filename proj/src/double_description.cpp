#include "lechlab/double_description.hpp"

#include <algorithm>

namespace lech {

Integer dotProduct(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void gcdNormalize(IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

Integer intDet(IntMat m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

int intRank(IntMat m) {
  if (m.empty()) return 0;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    for (size_t i = row + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      Integer a = m[row][col], b = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] * a - m[row][j] * b;
      gcdNormalize(m[i]);
    }
    ++row;
  }
  return static_cast<int>(row);
}

namespace {

// Column j of the adjugate-like solution: integer y with B y = det(B) e_j.
IntVec cramerColumn(const IntMat& b, size_t j) {
  const size_t n = b.size();
  IntVec y(n);
  for (size_t i = 0; i < n; ++i) {
    IntMat sub = b;
    for (size_t r = 0; r < n; ++r) sub[r][i] = (r == j) ? 1 : 0;
    y[i] = intDet(sub);
  }
  return y;
}

void setBit(std::vector<std::uint64_t>& bits, size_t i) { bits[i >> 6] |= 1ULL << (i & 63); }

std::vector<std::uint64_t> andBits(const std::vector<std::uint64_t>& a,
                                   const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

bool subsetBits(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

}  // namespace

std::vector<ExtremeRay> extremeRays(const IntMat& rows) {
  if (rows.empty()) throw InternalError("double description needs at least one inequality");
  const size_t n = rows[0].size();
  const size_t m = rows.size();
  const size_t words = (m + 63) / 64;

  // A maximal independent subset of rows seeds a simplicial cone.
  std::vector<size_t> basisIdx;
  IntMat reduced;
  for (size_t i = 0; i < m && basisIdx.size() < n; ++i) {
    IntMat trial = reduced;
    trial.push_back(rows[i]);
    if (intRank(trial) == static_cast<int>(basisIdx.size()) + 1) {
      basisIdx.push_back(i);
      reduced = std::move(trial);
    }
  }
  if (basisIdx.size() < n)
    throw InternalError("double description on a non-pointed cone (rank-deficient rows)");

  IntMat basis(n);
  for (size_t j = 0; j < n; ++j) basis[j] = rows[basisIdx[j]];
  Integer det = intDet(basis);

  std::vector<ExtremeRay> rays;
  for (size_t j = 0; j < n; ++j) {
    IntVec v = cramerColumn(basis, j);
    if (det < 0)
      for (auto& x : v) x = -x;
    gcdNormalize(v);
    ExtremeRay ray{std::move(v), std::vector<std::uint64_t>(words, 0)};
    for (size_t t = 0; t < n; ++t)
      if (t != j) setBit(ray.tightBits, basisIdx[t]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> processed(m, false);
  for (size_t j : basisIdx) processed[j] = true;

  for (size_t rowIdx = 0; rowIdx < m; ++rowIdx) {
    if (processed[rowIdx]) continue;
    const IntVec& a = rows[rowIdx];

    std::vector<Integer> val(rays.size());
    std::vector<size_t> pos, neg, zero;
    for (size_t i = 0; i < rays.size(); ++i) {
      val[i] = dotProduct(a, rays[i].v);
      if (val[i] > 0)
        pos.push_back(i);
      else if (val[i] < 0)
        neg.push_back(i);
      else
        zero.push_back(i);
    }

    if (neg.empty()) {
      for (size_t i : zero) setBit(rays[i].tightBits, rowIdx);
      processed[rowIdx] = true;
      continue;
    }

    std::vector<ExtremeRay> next;
    for (size_t i : pos) next.push_back(rays[i]);
    for (size_t i : zero) {
      next.push_back(rays[i]);
      setBit(next.back().tightBits, rowIdx);
    }
    for (size_t p : pos) {
      for (size_t q : neg) {
        auto common = andBits(rays[p].tightBits, rays[q].tightBits);
        bool adjacent = true;
        for (size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (subsetBits(common, rays[r].tightBits)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVec w(n);
        for (size_t i = 0; i < n; ++i) w[i] = val[p] * rays[q].v[i] - val[q] * rays[p].v[i];
        gcdNormalize(w);
        ExtremeRay ray{std::move(w), common};
        setBit(ray.tightBits, rowIdx);
        next.push_back(std::move(ray));
      }
    }
    rays = std::move(next);
    processed[rowIdx] = true;
  }

  std::sort(rays.begin(), rays.end(),
            [](const ExtremeRay& a, const ExtremeRay& b) { return a.v < b.v; });
  return rays;
}

}  // namespace lech
