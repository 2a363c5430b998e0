#pragma once

#include <cstddef>
#include <vector>

namespace uniperf {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

// minimize objective·x  s.t.  rows[i]·x (sense[i]) rhs[i],  x >= 0.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<Sense> senses;
  std::vector<double> rhs;

  std::size_t num_variables() const { return objective.size(); }
  std::size_t num_constraints() const { return rows.size(); }

  // Appends one constraint; returns its index.
  std::size_t add_constraint(std::vector<double> coefficients, Sense sense,
                             double bound);

  // Throws SolverError on a dimension mismatch or a non-finite coefficient.
  void validate() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
  std::size_t iterations = 0;
};

struct SimplexOptions {
  double pivot_tolerance = 1e-11;
  double optimality_tolerance = 1e-11;
  double feasibility_tolerance = 1e-9;
  std::size_t max_iterations = 200000;
};

// Dense two-phase primal simplex with Bland's rule. Phase one minimizes the
// sum of artificials; redundant equality rows are dropped before phase two.
LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace uniperf
