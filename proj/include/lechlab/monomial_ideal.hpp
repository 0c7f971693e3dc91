#ifndef LECHLAB_MONOMIAL_IDEAL_HPP
#define LECHLAB_MONOMIAL_IDEAL_HPP

#include "lechlab/exponent_vector.hpp"

#include <string>
#include <vector>

namespace lech {

inline constexpr int kMaxDim = 6;

/// A monomial ideal in d variables, stored as the antichain of minimal
/// generator exponents in lexicographic order. Equal ideals compare
/// bit-equal. Immutable after construction.
class MonomialIdeal {
 public:
  /// Antichain of the componentwise-minimal elements of `points`.
  static MonomialIdeal minimalize(std::vector<ExponentVector> points, int dim);

  static MonomialIdeal maximal(int dim);
  static MonomialIdeal maximalPower(int dim, int n);

  int dim() const { return dim_; }
  const std::vector<ExponentVector>& gens() const { return gens_; }

  /// Minimal number of generators mu(I).
  int mu() const { return static_cast<int>(gens_.size()); }

  /// True iff some generator divides x^v.
  bool contains(const ExponentVector& v) const;

  bool containsIdeal(const MonomialIdeal& other) const;

  /// The whole ring, generated by 1.
  bool isUnit() const { return gens_.size() == 1 && gens_[0].isZero(); }

  /// True iff every axis has a pure-power generator.
  bool isMPrimary() const;

  /// Largest r with I contained in m^r: the minimal coordinate sum of a generator.
  int ord() const;

  /// Minimal pure-power exponent p_k of each variable. Lattice points with
  /// some coordinate >= p_k lie in the ideal. Throws unless m-primary.
  std::vector<int> purePowers() const;

  /// Image of the ideal under x_axis -> 0, in d-1 variables: generators with
  /// zero exponent on `axis`, that coordinate deleted.
  MonomialIdeal substituteZero(int axis) const;

  bool operator==(const MonomialIdeal& other) const {
    return dim_ == other.dim_ && gens_ == other.gens_;
  }
  bool operator<(const MonomialIdeal& other) const;

  std::string toString() const;

 private:
  MonomialIdeal(int dim, std::vector<ExponentVector> sortedGens)
      : dim_(dim), gens_(std::move(sortedGens)) {}

  int dim_ = 0;
  std::vector<ExponentVector> gens_;
};

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// I^n; power(I, 0) is the unit ideal (rejected by every invariant routine).
MonomialIdeal power(const MonomialIdeal& a, int n);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// Monomial colon a : b.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);

void requireSameDim(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace lech

#endif
