#include "pcg/linear_feasibility.hpp"

#include "pcg/error.hpp"

namespace pcg {

std::optional<std::vector<Rational>> find_feasible_point(std::size_t num_vars,
                                                         const std::vector<LinearConstraint>& rows) {
  const std::size_t m = rows.size();
  std::size_t artificials = 0;
  for (const auto& r : rows) {
    if (r.coeffs.size() != num_vars) throw PreconditionError("constraint width mismatch");
    if (r.bound.sign() < 0) ++artificials;
  }
  if (artificials == 0) return std::vector<Rational>(num_vars);

  // Columns: x (num_vars) | slack (m) | artificial (artificials) | rhs.
  const std::size_t cols = num_vars + m + artificials;
  const std::size_t rhs = cols;
  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(m);
  std::vector<bool> is_artificial(cols, false);
  std::size_t next_art = num_vars + m;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& r = rows[i];
    bool flip = r.bound.sign() < 0;
    for (std::size_t j = 0; j < num_vars; ++j) {
      if (!r.coeffs[j].is_zero()) tab[i][j] = flip ? -r.coeffs[j] : r.coeffs[j];
    }
    tab[i][num_vars + i] = Rational(flip ? -1 : 1);
    tab[i][rhs] = flip ? -r.bound : r.bound;
    if (flip) {
      tab[i][next_art] = Rational(1);
      is_artificial[next_art] = true;
      basis[i] = next_art++;
    } else {
      basis[i] = num_vars + i;
    }
  }

  // Reduced costs of "minimize sum of artificials".
  std::vector<Rational> cost(cols + 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_artificial[basis[i]]) continue;
    for (std::size_t j = 0; j <= cols; ++j) {
      if (!is_artificial[j] && !tab[i][j].is_zero()) cost[j] -= tab[i][j];
    }
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!is_artificial[j] && cost[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter].sign() <= 0) continue;
      Rational ratio = tab[i][rhs] / tab[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase one

    auto& prow = tab[leave];
    Rational pivot = prow[enter];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= cols; ++j) {
      if (prow[j].is_zero()) continue;
      prow[j] /= pivot;
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter].is_zero()) continue;
      Rational f = tab[i][enter];
      for (auto j : nz) tab[i][j] -= f * prow[j];
    }
    if (!cost[enter].is_zero()) {
      Rational f = cost[enter];
      for (auto j : nz) cost[j] -= f * prow[j];
    }
    basis[leave] = enter;
  }

  // Phase-one optimum is -cost[rhs]; feasible iff every artificial is zero.
  for (std::size_t i = 0; i < m; ++i) {
    if (is_artificial[basis[i]] && !tab[i][rhs].is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(num_vars);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < num_vars) x[basis[i]] = tab[i][rhs];
  }
  return x;
}

}  // namespace pcg
