#ifndef CYBERINS_CONTRACT_HPP
#define CYBERINS_CONTRACT_HPP

#include "cyberins/model.hpp"

namespace cyberins {

enum class ContractObjective { WelfareMax, ProfitMax };

struct ContractSolution {
    Contract contract;
    double p_low = 0.0;   // smallest risk probability that buys
    double p_high = 1.0;  // largest risk probability the insurer accepts
    double total_welfare = 0.0;
    double insurer_profit = 0.0;
    ContractObjective objective = ContractObjective::WelfareMax;
};

struct ContractEval {
    double total_welfare = 0.0;
    double insurer_profit = 0.0;
    double p_low = 0.0;
    double p_high = 0.0;
};

// Participation band for a contract (z, c) under risk-aversion degree K:
// p_low = min(z / (K c), 1), p_high = min(z / c, 1).  Throws for c = 0.
void participation_bounds(double z, double c, double K, double& p_low, double& p_high);

// Total welfare and insurer profit for users uniformly distributed over risk
// probability p in [0, 1].  The integrands are linear in p, so everything is
// evaluated in closed form.
ContractEval evaluate_contract(double w, double R, double K, double z, double c);

// Welfare-maximizing contract (z, c) = (R, R): p_low = 1/K,
// TW = w - R (2K-1)/(2K), profit = R (K-1)^2 / (2 K^2).
ContractSolution welfare_contract(double w, double R, double K);

// Profit-maximizing (monopolist) contract (z, c) = (R K^2/(2K-1), R):
// p_low = K/(2K-1), profit = R (K-1)^2 / (2 (2K-1)).
ContractSolution profit_contract(double w, double R, double K);

// (R/2) [K^2 (3K-2)/(2K-1)^2 - (2K-1)/K]; equals the welfare difference
// between the two optimal contracts.
double welfare_gap(double R, double K);

// Independent grid-search oracle over (z, c) in [0, 1.5R] x [0, R] at
// resolution R/2000 with local refinement.  WelfareMax maximizes total
// welfare subject to non-negative profit and the fairness cap z <= R;
// ProfitMax maximizes profit subject to total welfare at least the uninsured
// level w - K R / 2.  Ties break toward the lexicographically smaller (z, c).
ContractSolution numeric_contract_argmax(double w, double R, double K, ContractObjective objective);

}  // namespace cyberins

#endif
