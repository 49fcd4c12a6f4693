#ifndef CYBERINS_ASYM_HPP
#define CYBERINS_ASYM_HPP

#include <map>

#include "cyberins/invest.hpp"
#include "cyberins/model.hpp"

namespace cyberins {

enum class AsymScenario { NoInfo, PostContractInfo, PreContractInfo };
enum class CoverageKind { Full, Partial };
enum class EquilibriumKind { Pooling, Separating };
enum class UserClass { Blended, LC, HC };

// Low-chance / high-chance risk classes with mixing weight theta (the HC
// share).  Validation enforces p_hc(x) > p_lc(x) on a grid; the optional
// toggle additionally enforces the derivative ordering 0 > p'_lc > p'_hc.
struct RiskClassPair {
    RiskFunction lc;
    RiskFunction hc;
    double theta = 0.5;
    bool check_derivative_ordering = false;

    double blended_prob(double x) const;
    double blended_dprob(double x) const;
    double blended_p0() const { return theta * hc.p0 + (1.0 - theta) * lc.p0; }
    void validate() const;
};

// Outcome of one information-asymmetry contract problem.  Pooling scenarios
// carry exactly one contract (key Blended for NoInfo, where the user also
// invests blindly; the post-contract scenario keys class investments by
// LC/HC).  All expected-utility quantities, including value_of_information,
// are measured with the utility referenced at w0 (see UtilityFunction).
struct AsymSolution {
    AsymScenario scenario = AsymScenario::NoInfo;
    EquilibriumKind equilibrium_kind = EquilibriumKind::Pooling;
    std::map<UserClass, Contract> contracts;
    std::map<UserClass, double> investments;
    double insurer_profit = 0.0;
    CoverageKind coverage_kind = CoverageKind::Partial;
    double value_of_information = 0.0;
    bool no_market = false;  // no contract earns a positive profit
};

// theta * p_hc(x) + (1 - theta) * p_lc(x) and its derivative.
double blended_risk(const RiskClassPair& pair, double x);
double blended_risk_deriv(const RiskClassPair& pair, double x);

// Maximizes EU(x) = p(x) u(w0 - x - z - R + c) + (1 - p(x)) u(w0 - x - z)
// over x in [0, x_max]: the insured pays the premium in both states, suffers
// the deductible R - c on a loss, and sinks the investment either way.
// Golden-section around a coarse scan, polished by derivative bisection;
// falls back to a dense grid if the bracket does not behave unimodally.
InvestmentSolution user_best_investment(const Contract& contract, const RiskFunction& risk,
                                        const UtilityFunction& util, double w0, double R);
InvestmentSolution user_best_investment_blended(const Contract& contract, const RiskClassPair& pair,
                                                const UtilityFunction& util, double w0, double R);

// Expected-utility gain from learning one's class under a fixed contract:
// theta EU_hc(C, x_hc) + (1-theta) EU_lc(C, x_lc) - EU_blend(C, x_blend),
// each x the respective best response.  Non-negative by construction.
double value_of_information_post(const Contract& contract, const RiskClassPair& pair,
                                 const UtilityFunction& util, double w0, double R);

// Pooling contract when neither side knows the class: the insurer maximizes
// (1 - p_a(x*)) z - p_a(x*) c over (z, c) with the blended best response x*
// substituted in, subject to participation against the uninsured optimum.
AsymSolution solve_no_info(const RiskClassPair& pair, const UtilityFunction& util, double w0,
                           double R);

// Pooling contract when users learn their class after signing: class-specific
// best responses, per-class participation, profit weighted by class shares.
AsymSolution solve_post_contract_info(const RiskClassPair& pair, const UtilityFunction& util,
                                      double w0, double R);

// Separating contract pair when users learn their class before signing:
// coarse-to-fine search over (C_lc, C_hc) under per-class participation and
// both incentive-compatibility constraints.
AsymSolution solve_pre_contract_info(const RiskClassPair& pair, const UtilityFunction& util,
                                     double w0, double R);

}  // namespace cyberins

#endif
