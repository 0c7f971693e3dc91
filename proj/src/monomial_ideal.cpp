#include "lechlab/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>

namespace lech {

void requireSameDim(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw DomainError("ideal dimension mismatch");
}

MonomialIdeal MonomialIdeal::minimalize(std::vector<ExponentVector> points, int dim) {
  if (dim < 1 || dim > kMaxDim)
    throw DomainError("ambient dimension must be between 1 and " + std::to_string(kMaxDim));
  if (points.empty()) throw DomainError("an ideal needs at least one generator");
  for (const auto& p : points)
    if (p.dim() != dim) throw DomainError("generator length does not match ambient dimension");

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // Scan in increasing total degree so a point can only be dominated by one
  // already kept.
  std::stable_sort(points.begin(), points.end(),
                   [](const ExponentVector& a, const ExponentVector& b) {
                     return a.sum() < b.sum();
                   });
  std::vector<ExponentVector> kept;
  for (const auto& p : points) {
    bool dominated = false;
    for (const auto& g : kept) {
      if (g.sum() >= p.sum()) break;
      if (g.dominatedBy(p)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(p);
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(dim, std::move(kept));
}

MonomialIdeal MonomialIdeal::maximal(int dim) {
  std::vector<ExponentVector> gens;
  for (int k = 0; k < dim; ++k) gens.push_back(ExponentVector::unit(dim, k));
  return minimalize(std::move(gens), dim);
}

MonomialIdeal MonomialIdeal::maximalPower(int dim, int n) {
  if (n < 0) throw DomainError("negative power of the maximal ideal");
  return power(maximal(dim), n);
}

bool MonomialIdeal::contains(const ExponentVector& v) const {
  if (v.dim() != dim_) throw DomainError("point dimension mismatch");
  for (const auto& g : gens_)
    if (g.dominatedBy(v)) return true;
  return false;
}

bool MonomialIdeal::containsIdeal(const MonomialIdeal& other) const {
  requireSameDim(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [this](const ExponentVector& g) { return contains(g); });
}

bool MonomialIdeal::isMPrimary() const {
  for (int k = 0; k < dim_; ++k) {
    bool found = false;
    for (const auto& g : gens_) {
      bool pure = true;
      for (int j = 0; j < dim_; ++j)
        if (j != k && g[j] != 0) {
          pure = false;
          break;
        }
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

int MonomialIdeal::ord() const {
  int best = gens_[0].sum();
  for (const auto& g : gens_) best = std::min(best, g.sum());
  return best;
}

std::vector<int> MonomialIdeal::purePowers() const {
  if (isUnit()) throw DomainError("unit ideal has no pure-power box");
  std::vector<int> p(dim_, -1);
  for (const auto& g : gens_) {
    int axis = -1;
    bool pure = true;
    for (int k = 0; k < dim_; ++k) {
      if (g[k] == 0) continue;
      if (axis != -1) {
        pure = false;
        break;
      }
      axis = k;
    }
    if (pure && axis != -1 && (p[axis] == -1 || g[axis] < p[axis])) p[axis] = g[axis];
  }
  for (int k = 0; k < dim_; ++k)
    if (p[k] == -1) throw DomainError("ideal is not m-primary: no pure power on axis " +
                                      std::to_string(k + 1));
  return p;
}

MonomialIdeal MonomialIdeal::substituteZero(int axis) const {
  if (axis < 0 || axis >= dim_) throw DomainError("axis out of range");
  if (dim_ < 2) throw DomainError("cannot pass to a 0-variable ring");
  std::vector<ExponentVector> image;
  for (const auto& g : gens_)
    if (g[axis] == 0) image.push_back(g.dropAxis(axis));
  if (image.empty()) throw DomainError("image ideal is zero: no generator avoids the axis");
  return minimalize(std::move(image), dim_ - 1);
}

bool MonomialIdeal::operator<(const MonomialIdeal& other) const {
  if (dim_ != other.dim_) return dim_ < other.dim_;
  return gens_ < other.gens_;
}

std::string MonomialIdeal::toString() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) out << ", ";
    out << gens_[i].toString();
  }
  out << ")";
  return out.str();
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  requireSameDim(a, b);
  std::vector<ExponentVector> sums;
  sums.reserve(a.gens().size() * b.gens().size());
  for (const auto& g : a.gens())
    for (const auto& h : b.gens()) sums.push_back(g.plus(h));
  return MonomialIdeal::minimalize(std::move(sums), a.dim());
}

MonomialIdeal power(const MonomialIdeal& a, int n) {
  if (n < 0) throw DomainError("negative ideal power");
  if (n == 0) return MonomialIdeal::minimalize({ExponentVector::zero(a.dim())}, a.dim());
  MonomialIdeal r = a;
  for (int i = 1; i < n; ++i) r = product(r, a);
  return r;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  requireSameDim(a, b);
  std::vector<ExponentVector> all = a.gens();
  all.insert(all.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal::minimalize(std::move(all), a.dim());
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  requireSameDim(a, b);
  std::vector<ExponentVector> maxes;
  maxes.reserve(a.gens().size() * b.gens().size());
  for (const auto& g : a.gens())
    for (const auto& h : b.gens()) maxes.push_back(g.maxWith(h));
  return MonomialIdeal::minimalize(std::move(maxes), a.dim());
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  requireSameDim(a, b);
  bool first = true;
  MonomialIdeal result = a;
  for (const auto& divisor : b.gens()) {
    std::vector<ExponentVector> shifted;
    shifted.reserve(a.gens().size());
    for (const auto& g : a.gens()) shifted.push_back(g.minusClamped(divisor));
    MonomialIdeal part = MonomialIdeal::minimalize(std::move(shifted), a.dim());
    result = first ? part : intersect(result, part);
    first = false;
  }
  return result;
}

}  // namespace lech
