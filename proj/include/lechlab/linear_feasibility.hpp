#ifndef LECHLAB_LINEAR_FEASIBILITY_HPP
#define LECHLAB_LINEAR_FEASIBILITY_HPP

#include "lechlab/monomial_ideal.hpp"
#include "lechlab/numeric.hpp"

#include <vector>

namespace lech {

/// Exact feasibility of "point componentwise-dominates a convex combination of
/// the generators": exists lambda >= 0 with sum lambda = 1 and
/// sum lambda_g * g <= point. This is Newton-polyhedron membership without a
/// facet description (phase-1 simplex over rationals, Bland's rule).
bool dominatesConvexCombination(const std::vector<ExponentVector>& generators,
                                const std::vector<Rational>& point);

bool dominatesConvexCombination(const std::vector<ExponentVector>& generators,
                                const ExponentVector& point);

}  // namespace lech

#endif
