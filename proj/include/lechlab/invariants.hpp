#ifndef LECHLAB_INVARIANTS_HPP
#define LECHLAB_INVARIANTS_HPP

#include "lechlab/monomial_ideal.hpp"
#include "lechlab/newton_polyhedron.hpp"

#include <vector>

namespace lech {

/// e_i = e_i(m | I) for i = 0..d: e_0 = e(I), e_d = e(m) = 1,
/// e_{d-1} = ord(I).
struct MixedMultiplicityVector {
  int dim = 0;
  std::vector<long long> e;
};

struct InvariantReport {
  MonomialIdeal ideal;
  MonomialIdeal closure;
  bool isClosed;
  long long colength;
  long long multiplicity;
  int mu;
  int ord;
  int rInvariant;
  MixedMultiplicityVector mixed;
  long long eOfMI;
};

/// Number of standard monomials: lattice points of the pure-power box outside
/// the ideal. Throws unless m-primary and proper.
long long colength(const MonomialIdeal& ideal);

/// d! * covolume(I); the polyhedral route, d <= 4.
long long multiplicity(const MonomialIdeal& ideal);

struct AsymptoticsOptions {
  int windowStartCap = 12;
  long long cellBudget = 1LL << 26;
};

/// Independent route: fits the degree-d polynomial to lambda(R/I^n) over a
/// sliding window, accepting only when two consecutive windows agree on every
/// coefficient and each predicts its next value exactly. Returns d! times the
/// leading coefficient.
long long multiplicityByAsymptotics(const MonomialIdeal& ideal,
                                    const AsymptoticsOptions& opts = {});

enum class MultiplicityMethod { Polyhedral, Asymptotics };

long long multiplicityBy(const MonomialIdeal& ideal, MultiplicityMethod method,
                         const AsymptoticsOptions& opts = {});

/// Interpolates e(m^s I) for s = 0..d against the expansion formula
/// e(m^s I) = sum_i binom(d,i) s^i e_i (with 0^0 = 1) and solves exactly.
MixedMultiplicityVector mixedMultiplicities(
    const MonomialIdeal& ideal, MultiplicityMethod method = MultiplicityMethod::Polyhedral,
    const AsymptoticsOptions& opts = {});

/// Largest r with I = m^r J: strips maximal-ideal factors via I : m.
int rInvariant(const MonomialIdeal& ideal);

/// All invariants at once; internal consistency is checked before returning.
/// The polyhedral method requires d <= 4; the asymptotics method is the
/// experimental d >= 5 route.
InvariantReport report(const MonomialIdeal& ideal,
                       MultiplicityMethod method = MultiplicityMethod::Polyhedral,
                       const AsymptoticsOptions& opts = {});

}  // namespace lech

#endif
