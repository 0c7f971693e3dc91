#ifndef LECHLAB_NEWTON_POLYHEDRON_HPP
#define LECHLAB_NEWTON_POLYHEDRON_HPP

#include "lechlab/double_description.hpp"
#include "lechlab/monomial_ideal.hpp"

#include <vector>

namespace lech {

/// One facet inequality <normal, v> >= offset with a primitive normal >= 0.
struct Facet {
  IntVec normal;
  Integer offset;
};

/// Facet + vertex description of NP(I) = conv(gens) + R^d_{>=0}, exact
/// throughout. Built by buildPolyhedron for d <= 4.
struct NewtonPolyhedron {
  int dim = 0;
  std::vector<Facet> facets;
  std::vector<ExponentVector> vertices;
  std::vector<ExponentVector> sourceGens;
};

/// Exact double description over the homogenized generators plus the d
/// recession rays. Requires isMPrimary(I) and d <= 4.
NewtonPolyhedron buildPolyhedron(const MonomialIdeal& ideal);

bool npMembership(const NewtonPolyhedron& np, const ExponentVector& v);
bool npMembership(const NewtonPolyhedron& np, const std::vector<Rational>& v);

/// Monomials with exponent vector inside NP(I): lattice points of the
/// bounding box filtered by membership, minimalized. For d = 5, 6 membership
/// falls back to the exact feasibility test (no facets).
MonomialIdeal integralClosure(const MonomialIdeal& ideal);

bool isIntegrallyClosed(const MonomialIdeal& ideal);

/// vol(R^d_{>=0} \ NP(I)), exact. Volume of NP(I) within the pure-power box
/// by fan triangulation from the lexicographically smallest vertex.
/// d! * covolume is checked to be a positive integer. Requires d <= 4.
Rational covolume(const MonomialIdeal& ideal);

}  // namespace lech

#endif
