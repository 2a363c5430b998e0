#include "uniperf/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "uniperf/error.hpp"

namespace uniperf {

std::size_t LinearProgram::add_constraint(std::vector<double> coefficients,
                                          Sense sense, double bound) {
  rows.push_back(std::move(coefficients));
  senses.push_back(sense);
  rhs.push_back(bound);
  return rows.size() - 1;
}

void LinearProgram::validate() const {
  const std::size_t n = objective.size();
  if (senses.size() != rows.size() || rhs.size() != rows.size()) {
    throw SolverError("LP dimension mismatch: " + std::to_string(rows.size()) +
                      " rows, " + std::to_string(senses.size()) + " senses, " +
                      std::to_string(rhs.size()) + " right-hand sides");
  }
  for (double c : objective) {
    if (!std::isfinite(c)) throw SolverError("non-finite objective coefficient");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) {
      throw SolverError("LP row " + std::to_string(i) + " has " +
                        std::to_string(rows[i].size()) + " coefficients, expected " +
                        std::to_string(n));
    }
    for (double a : rows[i]) {
      if (!std::isfinite(a)) {
        throw SolverError("non-finite coefficient in row " + std::to_string(i));
      }
    }
    if (!std::isfinite(rhs[i])) {
      throw SolverError("non-finite right-hand side in row " + std::to_string(i));
    }
  }
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& lp, const SimplexOptions& options)
      : opt_(options), n_(lp.num_variables()) {
    const std::size_t m = lp.num_constraints();
    std::size_t slacks = 0;
    std::size_t artificials = 0;
    for (Sense s : lp.senses) {
      if (s != Sense::kEqual) ++slacks;
    }
    // Rows are flipped so that every right-hand side is non-negative; a
    // flipped <= becomes >= and needs an artificial.
    std::vector<Sense> senses(lp.senses);
    std::vector<double> sign(m, 1.0);
    for (std::size_t i = 0; i < m; ++i) {
      if (lp.rhs[i] < 0.0) {
        sign[i] = -1.0;
        if (senses[i] == Sense::kLessEqual) {
          senses[i] = Sense::kGreaterEqual;
        } else if (senses[i] == Sense::kGreaterEqual) {
          senses[i] = Sense::kLessEqual;
        }
      }
      if (senses[i] != Sense::kLessEqual) ++artificials;
    }
    first_artificial_ = n_ + slacks;
    cols_ = first_artificial_ + artificials;
    t_.assign(m + 1, std::vector<double>(cols_ + 1, 0.0));
    basis_.assign(m, 0);

    std::size_t slack = n_;
    std::size_t art = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = sign[i] * lp.rows[i][j];
      t_[i][cols_] = sign[i] * lp.rhs[i];
      switch (senses[i]) {
        case Sense::kLessEqual:
          t_[i][slack] = 1.0;
          basis_[i] = slack++;
          break;
        case Sense::kGreaterEqual:
          t_[i][slack++] = -1.0;
          t_[i][art] = 1.0;
          basis_[i] = art++;
          break;
        case Sense::kEqual:
          t_[i][art] = 1.0;
          basis_[i] = art++;
          break;
      }
    }
  }

  std::size_t rows() const { return basis_.size(); }
  std::size_t iterations() const { return iterations_; }

  // Installs reduced costs for the given column costs.
  void set_costs(const std::vector<double>& cost) {
    auto& z = t_.back();
    std::fill(z.begin(), z.end(), 0.0);
    for (std::size_t j = 0; j < cols_; ++j) z[j] = cost[j];
    for (std::size_t i = 0; i < rows(); ++i) {
      const double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) z[j] -= cb * t_[i][j];
    }
  }

  // Minimizes the installed costs. Returns false when unbounded.
  bool optimize(bool allow_artificials) {
    const std::size_t limit = allow_artificials ? cols_ : first_artificial_;
    for (;;) {
      if (++iterations_ > opt_.max_iterations) {
        throw SolverError("simplex iteration limit reached");
      }
      const auto& z = t_.back();
      std::size_t entering = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (z[j] < -opt_.optimality_tolerance) {
          entering = j;
          break;
        }
      }
      if (entering == limit) return true;

      std::size_t leaving = rows();
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows(); ++i) {
        const double a = t_[i][entering];
        if (a <= opt_.pivot_tolerance) continue;
        const double ratio = t_[i][cols_] / a;
        if (leaving == rows()) {
          best = ratio;
          leaving = i;
          continue;
        }
        const double tie = 1e-12 * std::max(1.0, std::abs(best));
        if (ratio < best - tie) {
          best = ratio;
          leaving = i;
        } else if (ratio <= best + tie && basis_[i] < basis_[leaving]) {
          best = std::min(best, ratio);
          leaving = i;
        }
      }
      if (leaving == rows()) return false;
      pivot(leaving, entering);
    }
  }

  double objective_value() const { return -t_.back()[cols_]; }

  // Pivots remaining artificials out of the basis; drops rows where that is
  // impossible (linearly dependent constraints).
  void expel_artificials() {
    for (std::size_t i = 0; i < rows();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial_;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (std::abs(t_[i][j]) > opt_.pivot_tolerance) {
          col = j;
          break;
        }
      }
      if (col < first_artificial_) {
        pivot(i, col);
        ++i;
      } else {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::vector<double> primal() const {
    std::vector<double> x(n_, 0.0);
    for (std::size_t i = 0; i < rows(); ++i) {
      if (basis_[i] < n_) x[basis_[i]] = std::max(0.0, t_[i][cols_]);
    }
    return x;
  }

  std::size_t first_artificial() const { return first_artificial_; }
  std::size_t columns() const { return cols_; }

 private:
  void pivot(std::size_t r, std::size_t c) {
    auto& prow = t_[r];
    const double p = prow[c];
    for (auto& v : prow) v /= p;
    prow[c] = 1.0;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r) continue;
      const double factor = t_[i][c];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= factor * prow[j];
      t_[i][c] = 0.0;
    }
    basis_[r] = c;
  }

  SimplexOptions opt_;
  std::size_t n_;
  std::size_t first_artificial_ = 0;
  std::size_t cols_ = 0;
  std::size_t iterations_ = 0;
  std::vector<std::vector<double>> t_;  // last row holds reduced costs
  std::vector<std::size_t> basis_;
};

double magnitude(const LinearProgram& lp) {
  double scale = 1.0;
  for (double b : lp.rhs) scale = std::max(scale, std::abs(b));
  return scale;
}

void check_feasible(const LinearProgram& lp, const std::vector<double>& x,
                    double tolerance) {
  for (std::size_t i = 0; i < lp.num_constraints(); ++i) {
    double lhs = 0.0;
    double norm = std::abs(lp.rhs[i]);
    for (std::size_t j = 0; j < x.size(); ++j) {
      lhs += lp.rows[i][j] * x[j];
      norm = std::max(norm, std::abs(lp.rows[i][j] * x[j]));
    }
    const double slack = lp.rhs[i] - lhs;
    const double tol = tolerance * std::max(1.0, norm);
    const bool ok = lp.senses[i] == Sense::kLessEqual      ? slack >= -tol
                    : lp.senses[i] == Sense::kGreaterEqual ? slack <= tol
                                                           : std::abs(slack) <= tol;
    if (!ok) {
      throw SolverError("simplex returned a point violating row " +
                        std::to_string(i) + " by " + std::to_string(std::abs(slack)));
    }
  }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options) {
  lp.validate();
  Tableau tab(lp, options);
  LpSolution out;

  if (tab.first_artificial() < tab.columns()) {
    std::vector<double> phase_one(tab.columns(), 0.0);
    for (std::size_t j = tab.first_artificial(); j < tab.columns(); ++j) {
      phase_one[j] = 1.0;
    }
    tab.set_costs(phase_one);
    tab.optimize(/*allow_artificials=*/true);
    if (tab.objective_value() > options.feasibility_tolerance * magnitude(lp)) {
      out.status = LpStatus::kInfeasible;
      out.iterations = tab.iterations();
      return out;
    }
    tab.expel_artificials();
  }

  std::vector<double> cost(tab.columns(), 0.0);
  std::copy(lp.objective.begin(), lp.objective.end(), cost.begin());
  tab.set_costs(cost);
  const bool bounded = tab.optimize(/*allow_artificials=*/false);
  out.iterations = tab.iterations();
  if (!bounded) {
    out.status = LpStatus::kUnbounded;
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.x = tab.primal();
  for (std::size_t j = 0; j < out.x.size(); ++j) {
    out.objective += lp.objective[j] * out.x[j];
  }
  check_feasible(lp, out.x, options.feasibility_tolerance);
  return out;
}

}  // namespace uniperf
