#ifndef CYBERINS_VALIDATE_HPP
#define CYBERINS_VALIDATE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

#include "cyberins/model.hpp"

namespace cyberins {

// Counter-based uniform draw in [0, 1): a pure function of (seed, trial,
// stream), reproducible across platforms and worker partitions.
double counter_uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream);

struct McReport {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t trials = 0;
    double analytic = 0.0;
    double z_score = 0.0;
    std::uint64_t seed = 0;
};

// Simulates per-user loss indicators with probabilities p(x_j), realizes the
// joint-loss event 1 - prod(1 - B_j), and accounts wealth for user 0 as
// w0 - x_0 - premium - (R - c) * 1[loss] with the up-front premium P*c.
// The analytic reference is expected_realized_wealth (equal to
// expected_final_wealth at full coverage).  Deterministic given the seed;
// trials are processed in fixed-size blocks so the merged sums do not depend
// on the worker count.
McReport monte_carlo_wealth(const MarketParams& params, const Eigen::VectorXd& investments,
                            const Contract& contract, std::int64_t trials, std::uint64_t seed);

struct GridResult {
    double arg = 0.0;
    double value = 0.0;
};

struct GridResultN {
    Eigen::VectorXd arg;
    double value = 0.0;
};

// Dense scan of [lower, upper] at steps+1 points, then refine_levels local
// refinements that shrink the window to one old step on each side at 10x
// resolution.  Throws if the objective is non-finite anywhere on the grid.
GridResult grid_argmax(const std::function<double(double)>& objective, double lower, double upper,
                       int steps, int refine_levels);

// Product-grid version for small-dimensional boxes.
GridResultN grid_argmax(const std::function<double(const Eigen::VectorXd&)>& objective,
                        const Eigen::VectorXd& lower, const Eigen::VectorXd& upper, int steps,
                        int refine_levels);

// Left-hand side of the named full-coverage case's first-order condition,
// written as the derivative of that case's objective at the symmetric point:
//   case 1: -1 - p'(x) R
//   case 2: -1 - n p'(x) (1 - p(x))^(n-1) R
//   case 3: -1 - p'(x) (1 - p(x))^(n-1) R
// Throws on a case_id outside {1, 2, 3}.
double foc_residual(int case_id, const MarketParams& params, double x);

}  // namespace cyberins

#endif
