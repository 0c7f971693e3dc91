#include "lechlab/stirling.hpp"

namespace lech {

namespace {

// Coefficients of prod_{j=lo}^{hi} (x + j), ascending in x.
std::vector<Integer> expandLinearProduct(int lo, int hi) {
  std::vector<Integer> coeffs{1};
  for (int j = lo; j <= hi; ++j) {
    std::vector<Integer> next(coeffs.size() + 1, 0);
    for (size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];      // x * coeff
      next[k] += coeffs[k] * j;      // j * coeff
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace

Integer StirlingTable::evalP(const Integer& n) const {
  Integer r = 0;
  for (int i = 0; i < d; ++i) r += s[i] * ipow(n, d - i);
  return r;
}

Integer StirlingTable::evalQ(const Integer& n) const {
  Integer r = 0;
  for (int i = 1; i <= d; ++i) r += t[i] * ipow(n, d - i);
  return r;
}

StirlingTable stirlingTable(int d) {
  if (d < 1 || d > 8) throw DomainError("Stirling table dimension must be in [1, 8]");

  StirlingTable table;
  table.d = d;

  auto pCoeffs = expandLinearProduct(0, d - 1);  // x(x+1)...(x+d-1)
  table.s.resize(d);
  for (int i = 0; i < d; ++i) table.s[i] = pCoeffs[d - i];

  auto qCoeffs = expandLinearProduct(1, d - 1);  // (x+1)...(x+d-1)
  table.t.assign(d + 1, 0);
  for (int i = 1; i <= d; ++i) table.t[i] = qCoeffs[d - i];

  for (int n = 1; n <= 2 * d; ++n) {
    Integer direct = 1;
    for (int j = 0; j < d; ++j) direct *= (n + j);
    if (table.evalP(n) != direct) throw InternalError("rising-factorial expansion is wrong");
  }
  for (int i = 1; i <= d; ++i)
    if (table.t[i] != table.s[i - 1]) throw InternalError("t_i = s_{i-1} identity violated");
  Integer tailSum = 0;
  for (int i = 2; i <= d; ++i) tailSum += table.t[i];
  if (tailSum != factorialInt(d) - 1)
    throw InternalError("sum of t_2..t_d must equal d! - 1");
  if (d >= 3 && !(factorialInt(d - 1) * (d - 1) < factorialInt(d) - 1))
    throw InternalError("(d-1)!(d-1) < d! - 1 fails");
  return table;
}

}  // namespace lech
