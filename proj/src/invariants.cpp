#include "lechlab/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace lech {

namespace {

void requireProperMPrimary(const MonomialIdeal& ideal) {
  if (ideal.isUnit()) throw DomainError("unit ideal rejected by invariant computations");
  if (!ideal.isMPrimary()) throw DomainError("ideal is not m-primary: infinite colength");
}

// Membership grid over the half-open box [0, box_1) x ... x [0, box_d),
// row-major. A cell is 1 iff its monomial lies in the ideal.
struct StaircaseGrid {
  std::vector<int> box;
  std::vector<long long> stride;
  std::vector<char> cells;
  long long total = 1;

  StaircaseGrid(std::vector<int> extents, long long budget) : box(std::move(extents)) {
    stride.assign(box.size(), 0);
    for (int k = static_cast<int>(box.size()) - 1; k >= 0; --k) {
      stride[k] = total;
      if (box[k] <= 0) throw InternalError("empty grid axis");
      if (total > budget / box[k]) throw NotStabilized("lattice grid exceeds the cell budget");
      total *= box[k];
    }
    cells.assign(static_cast<size_t>(total), 0);
  }

  long long countZeros() const {
    return total - std::count(cells.begin(), cells.end(), char(1));
  }
};

// Fills `grid` with membership of the plain ideal: generator cells seeded,
// then closed upward coordinatewise.
void fillIdealGrid(StaircaseGrid& grid, const MonomialIdeal& ideal) {
  const int d = ideal.dim();
  for (const auto& g : ideal.gens()) {
    bool insideBox = true;
    long long idx = 0;
    for (int k = 0; k < d; ++k) {
      if (g[k] >= grid.box[k]) {
        insideBox = false;
        break;
      }
      idx += g[k] * grid.stride[k];
    }
    if (insideBox) grid.cells[idx] = 1;
  }
  std::vector<int> v(d, 0);
  for (long long idx = 0; idx < grid.total; ++idx) {
    if (!grid.cells[idx]) {
      for (int k = 0; k < d; ++k) {
        if (v[k] > 0 && grid.cells[idx - grid.stride[k]]) {
          grid.cells[idx] = 1;
          break;
        }
      }
    }
    for (int k = d - 1; k >= 0; --k) {
      if (++v[k] < grid.box[k]) break;
      v[k] = 0;
    }
  }
}

// lambda(R/I^n) for successive n, each power's membership grid derived from
// the previous one: v is in I^n iff v - g is in I^(n-1) for some generator g.
class PowerLengths {
 public:
  PowerLengths(const MonomialIdeal& ideal, long long cellBudget)
      : ideal_(ideal), p_(ideal.purePowers()), budget_(cellBudget) {}

  long long lambda(int n) {
    while (static_cast<int>(values_.size()) < n) step();
    return values_[n - 1];
  }

 private:
  void step() {
    const int n = static_cast<int>(values_.size()) + 1;
    const int d = ideal_.dim();
    std::vector<int> box(d);
    for (int k = 0; k < d; ++k) box[k] = n * p_[k];
    StaircaseGrid grid(box, budget_);

    std::vector<int> prevBox(d);
    for (int k = 0; k < d; ++k) prevBox[k] = (n - 1) * p_[k];

    std::vector<int> v(d, 0);
    std::vector<int> w(d, 0);
    for (long long idx = 0; idx < grid.total; ++idx) {
      for (const auto& g : ideal_.gens()) {
        bool nonneg = true;
        for (int k = 0; k < d; ++k) {
          w[k] = v[k] - g[k];
          if (w[k] < 0) {
            nonneg = false;
            break;
          }
        }
        if (!nonneg) continue;
        if (inPrevious(w, prevBox)) {
          grid.cells[idx] = 1;
          break;
        }
      }
      for (int k = d - 1; k >= 0; --k) {
        if (++v[k] < grid.box[k]) break;
        v[k] = 0;
      }
    }

    values_.push_back(grid.countZeros());
    prevGrid_ = std::move(grid);
  }

  bool inPrevious(const std::vector<int>& w, const std::vector<int>& prevBox) const {
    if (values_.empty()) return true;  // I^0 is the whole ring
    long long idx = 0;
    for (size_t k = 0; k < w.size(); ++k) {
      if (w[k] >= prevBox[k]) return true;  // dominates a pure power of I^(n-1)
      idx += w[k] * prevGrid_->stride[k];
    }
    return prevGrid_->cells[idx];
  }

  MonomialIdeal ideal_;
  std::vector<int> p_;
  long long budget_;
  std::vector<long long> values_;
  std::optional<StaircaseGrid> prevGrid_;
};

// Exact degree-(xs.size()-1) interpolation; coeffs[i] multiplies x^i.
std::vector<Rational> polyFit(const std::vector<int>& xs, const std::vector<long long>& ys) {
  const size_t n = xs.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (size_t r = 0; r < n; ++r) {
    Rational pw = 1;
    for (size_t c = 0; c < n; ++c) {
      m[r][c] = pw;
      pw *= xs[r];
    }
    m[r][n] = ys[r];
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw InternalError("singular interpolation system");
    std::swap(m[col], m[piv]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<Rational> coeffs(n);
  for (size_t i = 0; i < n; ++i) coeffs[i] = m[i][n] / m[i][i];
  return coeffs;
}

Rational evalPoly(const std::vector<Rational>& coeffs, long long x) {
  Rational r = 0;
  for (size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
  return r;
}

}  // namespace

long long colength(const MonomialIdeal& ideal) {
  requireProperMPrimary(ideal);
  StaircaseGrid grid(ideal.purePowers(), 1LL << 26);
  fillIdealGrid(grid, ideal);
  return grid.countZeros();
}

long long multiplicity(const MonomialIdeal& ideal) {
  requireProperMPrimary(ideal);
  Rational scaled = covolume(ideal) * Rational(factorialInt(ideal.dim()));
  if (denominator(scaled) != 1 || numerator(scaled) <= 0)
    throw InternalError("d! * covolume is not a positive integer");
  return static_cast<long long>(numerator(scaled));
}

long long multiplicityByAsymptotics(const MonomialIdeal& ideal, const AsymptoticsOptions& opts) {
  requireProperMPrimary(ideal);
  const int d = ideal.dim();
  PowerLengths lengths(ideal, opts.cellBudget);

  for (int n0 = 1; n0 <= opts.windowStartCap; ++n0) {
    std::vector<int> xs0, xs1;
    std::vector<long long> ys0, ys1;
    for (int j = 0; j <= d; ++j) {
      xs0.push_back(n0 + j);
      ys0.push_back(lengths.lambda(n0 + j));
      xs1.push_back(n0 + 1 + j);
      ys1.push_back(lengths.lambda(n0 + 1 + j));
    }
    auto fit0 = polyFit(xs0, ys0);
    auto fit1 = polyFit(xs1, ys1);
    if (fit0 != fit1) continue;
    if (evalPoly(fit0, n0 + d + 1) != lengths.lambda(n0 + d + 1)) continue;
    if (evalPoly(fit1, n0 + d + 2) != lengths.lambda(n0 + d + 2)) continue;
    // Far-point confirmation: the length function can ride a wrong polynomial
    // through a whole window before its true asymptotic regime starts, so the
    // fit must also predict a doubled-out index exactly.
    const int confirmAt = 2 * (n0 + d + 2);
    if (evalPoly(fit0, confirmAt) != lengths.lambda(confirmAt)) continue;

    Rational lead = fit0[d] * Rational(factorialInt(d));
    if (denominator(lead) != 1 || numerator(lead) <= 0) continue;
    return static_cast<long long>(numerator(lead));
  }
  throw NotStabilized("Hilbert function not stabilized within the window cap");
}

long long multiplicityBy(const MonomialIdeal& ideal, MultiplicityMethod method,
                         const AsymptoticsOptions& opts) {
  return method == MultiplicityMethod::Polyhedral ? multiplicity(ideal)
                                                  : multiplicityByAsymptotics(ideal, opts);
}

MixedMultiplicityVector mixedMultiplicities(const MonomialIdeal& ideal, MultiplicityMethod method,
                                            const AsymptoticsOptions& opts) {
  requireProperMPrimary(ideal);
  const int d = ideal.dim();
  const MonomialIdeal m = MonomialIdeal::maximal(d);

  // e(m^s I) for s = 0..d.
  std::vector<long long> values;
  MonomialIdeal current = ideal;
  for (int s = 0; s <= d; ++s) {
    values.push_back(multiplicityBy(current, method, opts));
    if (s < d) current = product(m, current);
  }

  // Solve sum_i binom(d,i) s^i e_i = e(m^s I), with 0^0 = 1.
  std::vector<std::vector<Rational>> sys(d + 1, std::vector<Rational>(d + 2));
  for (int s = 0; s <= d; ++s) {
    for (int i = 0; i <= d; ++i) {
      Integer pw = (i == 0) ? Integer(1) : ipow(Integer(s), i);
      sys[s][i] = Rational(binomialInt(d, i) * pw);
    }
    sys[s][d + 1] = values[s];
  }
  for (int col = 0; col <= d; ++col) {
    int piv = col;
    while (piv <= d && sys[piv][col] == 0) ++piv;
    if (piv > d) throw InternalError("singular mixed-multiplicity system");
    std::swap(sys[col], sys[piv]);
    for (int r = 0; r <= d; ++r) {
      if (r == col || sys[r][col] == 0) continue;
      Rational f = sys[r][col] / sys[col][col];
      for (int c = col; c <= d + 1; ++c) sys[r][c] -= f * sys[col][c];
    }
  }

  MixedMultiplicityVector mixed;
  mixed.dim = d;
  for (int i = 0; i <= d; ++i) {
    Rational v = sys[i][d + 1] / sys[i][i];
    if (denominator(v) != 1 || numerator(v) <= 0)
      throw InternalError("mixed multiplicities are not positive integers");
    mixed.e.push_back(static_cast<long long>(numerator(v)));
  }

  if (mixed.e[d] != 1) throw InternalError("e_d(m | I) must equal e(m) = 1");
  if (mixed.e[d - 1] != ideal.ord())
    throw InternalError("e_{d-1}(m | I) must equal ord(I)");
  for (int i = 0; i <= d; ++i) {
    // Rees-Sharp: e_i^d <= e(I)^(d-i).
    if (ipow(Integer(mixed.e[i]), d) > ipow(Integer(mixed.e[0]), d - i))
      throw InternalError("Rees-Sharp bound violated by the mixed multiplicities");
  }
  return mixed;
}

int rInvariant(const MonomialIdeal& ideal) {
  requireProperMPrimary(ideal);
  const MonomialIdeal m = MonomialIdeal::maximal(ideal.dim());
  MonomialIdeal current = ideal;
  int r = 0;
  while (true) {
    MonomialIdeal quotient = colon(current, m);
    if (product(m, quotient) == current) {
      ++r;
      current = quotient;
    } else {
      break;
    }
  }
  return r;
}

InvariantReport report(const MonomialIdeal& ideal, MultiplicityMethod method,
                       const AsymptoticsOptions& opts) {
  requireProperMPrimary(ideal);
  const int d = ideal.dim();
  if (method == MultiplicityMethod::Polyhedral && d > 4)
    throw DomainError("polyhedral reports are capped at d <= 4; request the asymptotics method");

  MonomialIdeal closure = integralClosure(ideal);
  MixedMultiplicityVector mixed = mixedMultiplicities(ideal, method, opts);
  const MonomialIdeal m = MonomialIdeal::maximal(d);

  InvariantReport rep{
      ideal,
      closure,
      closure == ideal,
      colength(ideal),
      multiplicityBy(ideal, method, opts),
      ideal.mu(),
      ideal.ord(),
      rInvariant(ideal),
      mixed,
      multiplicityBy(product(m, ideal), method, opts),
  };

  if (rep.multiplicity != mixed.e[0])
    throw InternalError("e(I) disagrees with e_0 of the mixed vector");
  Integer expansion = 0;
  for (int i = 0; i <= d; ++i) expansion += binomialInt(d, i) * mixed.e[i];
  if (expansion != rep.eOfMI)
    throw InternalError("e(mI) disagrees with the expansion of the mixed vector");
  return rep;
}

}  // namespace lech
