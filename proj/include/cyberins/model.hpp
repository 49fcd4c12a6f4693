#ifndef CYBERINS_MODEL_HPP
#define CYBERINS_MODEL_HPP

#include <Eigen/Dense>
#include <optional>

#include "cyberins/risk.hpp"

namespace cyberins {

// Insurance contract: premium z paid for coverage c, with deductible R - c.
struct Contract {
    double premium = 0.0;   // z >= 0
    double coverage = 0.0;  // c in [0, R]

    double deductible(double risk_size) const { return risk_size - coverage; }
    void validate(double risk_size) const;
};

// Market-wide parameters shared by the solvers.  risk_lc / risk_hc are only
// needed by the adverse-selection problems; when both are present the
// class-ordering invariant p_hc(x) > p_lc(x) is enforced on a grid.
struct MarketParams {
    int n = 1;          // user count >= 1
    double w0 = 100.0;  // initial wealth
    double R = 10.0;    // risk size, 0 < R < w0
    RiskFunction risk;
    UtilityFunction util;
    double theta = 0.0;  // proportion of the high-chance class, in [0, 1]
    std::optional<RiskFunction> risk_lc;
    std::optional<RiskFunction> risk_hc;

    void validate() const;
};

// Piecewise risk-averse valuation U_p(z,c) with risk-aversion degree K >= 1:
// an uninsured user values its position at w - p K R, an insured one at
// w - z - p K (R - c).
struct PiecewiseInsuranceUtility {
    double w = 100.0;
    double K = 1.0;  // >= 1
    double R = 10.0;

    double uninsured(double p) const { return w - p * K * R; }
    double insured(double p, double z, double c) const { return w - z - p * K * (R - c); }
    void validate() const;
};

// 1 - prod_j (1 - p(x_j)): probability that at least one user is hit under
// perfect contagion spread.  Throws on an empty vector.
double joint_loss_prob(const Eigen::VectorXd& investments, const RiskFunction& rf);

// Expected final wealth of `user` under the full-coverage wealth accounting
// w0 - x_i - P*c - R + c with P the joint loss probability (the premium is
// read as P*c).  Exact for c = R; the uninsured case is a separate path
// (see uninsured_expected_wealth).
double expected_final_wealth(const MarketParams& params, const Eigen::VectorXd& investments,
                             const Contract& contract, int user);

// Expectation of the realized wealth process w0 - x_i - P*c - (R - c)*1[loss]:
// premium paid up front, deductible R - c suffered when the joint loss event
// occurs.  Coincides with expected_final_wealth at full coverage.
double expected_realized_wealth(const MarketParams& params, const Eigen::VectorXd& investments,
                                const Contract& contract, int user);

// w0 - x - p(x) R: expected wealth with no insurance at all.
double uninsured_expected_wealth(const MarketParams& params, double x);

}  // namespace cyberins

#endif
