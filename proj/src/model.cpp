#include "cyberins/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cyberins {

void Contract::validate(double risk_size) const {
    if (!(premium >= 0.0))
        throw std::invalid_argument("Contract: premium must be non-negative");
    if (!(coverage >= 0.0) || coverage > risk_size + 1e-12)
        throw std::invalid_argument("Contract: coverage must lie in [0, R]");
}

void MarketParams::validate() const {
    if (n < 1) throw std::invalid_argument("MarketParams: n must be >= 1");
    if (!(R > 0.0) || !(R < w0))
        throw std::invalid_argument("MarketParams: risk size must satisfy 0 < R < w0");
    if (!(theta >= 0.0) || !(theta <= 1.0))
        throw std::invalid_argument("MarketParams: theta must lie in [0, 1]");
    risk.validate();
    util.validate();
    if (risk_lc && risk_hc) {
        risk_lc->validate();
        risk_hc->validate();
        const double hi = std::min(risk_lc->scan_limit(), risk_hc->scan_limit());
        for (int i = 0; i <= 64; ++i) {
            const double x = hi * i / 64.0;
            if (!(risk_hc->prob(x) > risk_lc->prob(x)))
                throw std::invalid_argument("MarketParams: class ordering p_hc(x) > p_lc(x) violated at x = " +
                                            std::to_string(x));
        }
    }
}

void PiecewiseInsuranceUtility::validate() const {
    if (!(K >= 1.0)) throw std::invalid_argument("PiecewiseInsuranceUtility: K must be >= 1");
    if (!(R > 0.0) || !(R < w)) throw std::invalid_argument("PiecewiseInsuranceUtility: need 0 < R < w");
}

double joint_loss_prob(const Eigen::VectorXd& investments, const RiskFunction& rf) {
    if (investments.size() == 0)
        throw std::invalid_argument("joint_loss_prob: empty investment vector");
    double survive = 1.0;
    for (Eigen::Index j = 0; j < investments.size(); ++j) {
        const double p = std::min(rf.prob(investments[j]), kProbCeiling);
        survive *= 1.0 - p;
    }
    return 1.0 - survive;
}

double expected_final_wealth(const MarketParams& params, const Eigen::VectorXd& investments,
                             const Contract& contract, int user) {
    contract.validate(params.R);
    if (user < 0 || user >= investments.size())
        throw std::invalid_argument("expected_final_wealth: user index out of range");
    const double P = joint_loss_prob(investments, params.risk);
    return params.w0 - investments[user] - P * contract.coverage - params.R + contract.coverage;
}

double expected_realized_wealth(const MarketParams& params, const Eigen::VectorXd& investments,
                                const Contract& contract, int user) {
    contract.validate(params.R);
    if (user < 0 || user >= investments.size())
        throw std::invalid_argument("expected_realized_wealth: user index out of range");
    const double P = joint_loss_prob(investments, params.risk);
    return params.w0 - investments[user] - P * contract.coverage - (params.R - contract.coverage) * P;
}

double uninsured_expected_wealth(const MarketParams& params, double x) {
    return params.w0 - x - params.risk.prob(x) * params.R;
}

}  // namespace cyberins
