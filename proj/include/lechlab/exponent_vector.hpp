#ifndef LECHLAB_EXPONENT_VECTOR_HPP
#define LECHLAB_EXPONENT_VECTOR_HPP

#include "lechlab/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace lech {

/// A lattice point in Z^d_{>=0}: the exponent vector of a monomial.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> coords) : coords_(std::move(coords)) { validate(); }
  ExponentVector(std::initializer_list<int> coords) : coords_(coords) { validate(); }

  static ExponentVector zero(int dim) { return ExponentVector(std::vector<int>(dim, 0)); }
  static ExponentVector unit(int dim, int axis, int value = 1) {
    std::vector<int> c(dim, 0);
    c.at(axis) = value;
    return ExponentVector(std::move(c));
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  int operator[](int k) const { return coords_[k]; }
  const std::vector<int>& coords() const { return coords_; }

  int sum() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }
  bool isZero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
  }

  /// Componentwise <=: x^this divides x^other.
  bool dominatedBy(const ExponentVector& other) const {
    for (int k = 0; k < dim(); ++k)
      if (coords_[k] > other.coords_[k]) return false;
    return true;
  }

  ExponentVector plus(const ExponentVector& other) const {
    std::vector<int> c(coords_);
    for (int k = 0; k < dim(); ++k) c[k] += other.coords_[k];
    return ExponentVector(std::move(c));
  }

  /// max(this_k - other_k, 0) per axis; the monomial colon g : a.
  ExponentVector minusClamped(const ExponentVector& other) const {
    std::vector<int> c(coords_);
    for (int k = 0; k < dim(); ++k) c[k] = std::max(c[k] - other.coords_[k], 0);
    return ExponentVector(std::move(c));
  }

  ExponentVector maxWith(const ExponentVector& other) const {
    std::vector<int> c(coords_);
    for (int k = 0; k < dim(); ++k) c[k] = std::max(c[k], other.coords_[k]);
    return ExponentVector(std::move(c));
  }

  /// Drops coordinate `axis`; used when passing to a smaller polynomial ring.
  ExponentVector dropAxis(int axis) const {
    std::vector<int> c;
    c.reserve(coords_.size() - 1);
    for (int k = 0; k < dim(); ++k)
      if (k != axis) c.push_back(coords_[k]);
    return ExponentVector(std::move(c));
  }

  bool operator==(const ExponentVector& other) const { return coords_ == other.coords_; }
  /// Lexicographic; the canonical generator order.
  bool operator<(const ExponentVector& other) const { return coords_ < other.coords_; }

  std::string toString() const;

 private:
  void validate() const {
    if (coords_.empty()) throw DomainError("exponent vector must have dimension >= 1");
    for (int c : coords_)
      if (c < 0) throw DomainError("exponent vector has a negative coordinate");
  }

  std::vector<int> coords_;
};

}  // namespace lech

#endif
