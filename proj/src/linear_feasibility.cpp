#include "lechlab/linear_feasibility.hpp"

namespace lech {

namespace {

// Phase-1 simplex on the tableau for
//   sum_g lambda_g * g_k + s_k = v_k   (k = 1..d, slack s_k >= 0)
//   sum_g lambda_g            = 1      (artificial a >= 0)
// minimizing the artificial; feasible iff the optimum is 0. The slack columns
// are basic for the first d rows, so a single artificial suffices. Bland's
// rule, exact rational pivots.
class PhaseOneSimplex {
 public:
  PhaseOneSimplex(const std::vector<ExponentVector>& gens, const std::vector<Rational>& v)
      : rows_(v.size() + 1), cols_(gens.size() + v.size() + 2) {
    const size_t d = v.size();
    const size_t ng = gens.size();
    artificialCol_ = ng + d;
    tab_.assign(rows_, std::vector<Rational>(cols_, 0));
    for (size_t k = 0; k < d; ++k) {
      for (size_t g = 0; g < ng; ++g) tab_[k][g] = gens[g][static_cast<int>(k)];
      tab_[k][ng + k] = 1;        // slack
      tab_[k][cols_ - 1] = v[k];  // rhs
    }
    for (size_t g = 0; g < ng; ++g) tab_[d][g] = 1;
    tab_[d][artificialCol_] = 1;
    tab_[d][cols_ - 1] = 1;
    basis_.resize(rows_);
    for (size_t k = 0; k < d; ++k) basis_[k] = ng + k;
    basis_[d] = artificialCol_;
  }

  bool feasible() {
    // Reduced costs of min(artificial) with the artificial basic in the last
    // row: r_j = c_j - (last tableau row)_j.
    std::vector<Rational> reduced(cols_ - 1, 0);
    for (size_t j = 0; j + 1 < cols_; ++j) {
      reduced[j] = -tab_[rows_ - 1][j];
      if (j == artificialCol_) reduced[j] += 1;
    }

    while (true) {
      size_t enter = cols_;
      for (size_t j = 0; j + 1 < cols_; ++j) {
        if (j == artificialCol_) continue;
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) break;

      size_t leave = rows_;
      Rational bestRatio = 0;
      for (size_t i = 0; i < rows_; ++i) {
        if (tab_[i][enter] <= 0) continue;
        Rational ratio = tab_[i][cols_ - 1] / tab_[i][enter];
        if (leave == rows_ || ratio < bestRatio ||
            (ratio == bestRatio && basis_[i] < basis_[leave])) {
          leave = i;
          bestRatio = ratio;
        }
      }
      if (leave == rows_)
        throw InternalError("phase-1 simplex claims an unbounded descent direction");
      pivot(leave, enter, reduced);
    }

    for (size_t i = 0; i < rows_; ++i)
      if (basis_[i] == artificialCol_) return tab_[i][cols_ - 1] == 0;
    return true;
  }

 private:
  void pivot(size_t leave, size_t enter, std::vector<Rational>& reduced) {
    Rational p = tab_[leave][enter];
    for (size_t j = 0; j < cols_; ++j) tab_[leave][j] /= p;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == leave || tab_[i][enter] == 0) continue;
      Rational f = tab_[i][enter];
      for (size_t j = 0; j < cols_; ++j) tab_[i][j] -= f * tab_[leave][j];
    }
    if (reduced[enter] != 0) {
      Rational f = reduced[enter];
      for (size_t j = 0; j + 1 < cols_; ++j) reduced[j] -= f * tab_[leave][j];
    }
    basis_[leave] = enter;
  }

  size_t rows_, cols_;
  size_t artificialCol_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<size_t> basis_;
};

}  // namespace

bool dominatesConvexCombination(const std::vector<ExponentVector>& generators,
                                const std::vector<Rational>& point) {
  if (generators.empty()) throw DomainError("feasibility test needs generators");
  for (const auto& c : point)
    if (c < 0) return false;
  PhaseOneSimplex lp(generators, point);
  return lp.feasible();
}

bool dominatesConvexCombination(const std::vector<ExponentVector>& generators,
                                const ExponentVector& point) {
  std::vector<Rational> p;
  p.reserve(point.dim());
  for (int k = 0; k < point.dim(); ++k) p.emplace_back(point[k]);
  return dominatesConvexCombination(generators, p);
}

}  // namespace lech
