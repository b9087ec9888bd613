#pragma once

#include "obbm/blocks.hpp"
#include "obbm/landscape.hpp"

#include <optional>
#include <vector>

namespace obbm {

// Per-block constants: c~ = (sum b)^2 / (2 (sum a)^2) and
// f(c~) = sqrt((1+c~)/2 + sqrt(c~^2/4 + c~)), always > 1/sqrt(2).
struct BlockConstants {
  double c_tilde = 0.0;
  double f_value = 0.0;
  double block_a = 0.0;
  double block_b = 0.0;
};

BlockConstants block_constants(const ObstacleLandscape& L, const BlockDivision& d,
                               std::size_t block_index);

double f_of_c_tilde(double c_tilde);

// Closed-form optimal strategy: x*_m = a_m f(c~_i), y*_m proportional to b_m,
// intermediate exponents c*_m (zero exactly at block cuts).
struct CrossingPlan {
  BlockDivision division;
  std::vector<double> x_star;
  std::vector<double> y_star;
  std::vector<double> c_star;  // length ell-1; c*_0 = c*_ell = 0 implicit
  double total_time = 0.0;
};

CrossingPlan crossing_plan(const ObstacleLandscape& L);

struct Feasibility {
  double total_time = 0.0;
  bool feasible = false;
};

// Total optimal crossing time and the verdict total <= 1 (+1e-12 slack).
Feasibility feasibility(const ObstacleLandscape& L);

struct PartialCrossing {
  std::size_t ell_hat_star = 0;       // highest obstacle fully crossable
  std::optional<double> b_star;       // partial penetration of the next obstacle
};

struct FrontierEstimate {
  bool feasible = false;
  std::optional<double> h_star;       // present iff feasible
  double limit_over_t = 0.0;          // predicted a.s. limit of max/t
  std::optional<PartialCrossing> partial;  // present iff infeasible
};

FrontierEstimate frontier(const ObstacleLandscape& L);

}  // namespace obbm
