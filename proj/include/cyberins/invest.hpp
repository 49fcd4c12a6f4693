#ifndef CYBERINS_INVEST_HPP
#define CYBERINS_INVEST_HPP

#include <vector>

#include "cyberins/model.hpp"

namespace cyberins {

enum class Boundary { Interior, ZeroInvestment, FullElimination };

struct InvestmentSolution {
    double x_star = 0.0;          // optimal investment (cost units)
    double p_star = 0.0;          // residual risk probability at the optimum
    double objective_value = 0.0; // case objective at the optimum
    Boundary boundary = Boundary::Interior;
    double foc_residual = 0.0;    // objective derivative at x_star
};

// Symmetric Nash points, sorted ascending by x_star; `selected` is the
// canonical (smallest-investment) equilibrium.
struct EquilibriumSet {
    std::vector<InvestmentSolution> equilibria;
    int count = 0;
    int selected = 0;

    const InvestmentSolution& canonical() const { return equilibria.at(selected); }
};

struct ComparisonReport {
    double x_case1 = 0.0;
    double x_case2 = 0.0;
    double x_case3 = 0.0;  // canonical equilibrium
    bool lemma1_holds = false;        // x3 <= x1 for every equilibrium
    bool lemma2_holds = false;        // x3 <= x2 for every equilibrium
    bool lemma3_precondition = false; // p0 < 1 - (1/n)^(1/(n-1))
    bool lemma3_holds = false;        // x2 >= x1, evaluated only under the precondition
    double threshold = 0.0;
};

// 1 - (1/n)^(1/(n-1)); the p(0) threshold under which cooperative investment
// dominates the isolated-user optimum.
double lemma3_threshold(int n);

// No cooperation, no infection spread: maximize w0 - x - p(x) R.
InvestmentSolution solve_case1(const MarketParams& params);

// Cooperation with spread: the symmetric social optimum of the aggregate
// wealth; objective reported per user as w0 - x - (1 - (1-p(x))^n) R.
InvestmentSolution solve_case2(const MarketParams& params);

// No cooperation with spread: all symmetric pure-strategy Nash equilibria of
// the investment game, each verified as a best response by a deviation scan.
EquilibriumSet solve_case3(const MarketParams& params);

// Partial coverage, isolated user (deductible D): maximize
// U(w0 - x(p0 - p) - p (R - D)) over p in [0, p0]; closed-form interior
// point dp = (R - D - c1) / (2 c2).
InvestmentSolution solve_partialA(const MarketParams& params, const InvestmentCostFunction& cost,
                                  double deductible);

// Partial coverage with spread: symmetric equilibria of the deductible game
// found by damped best-response iteration from multiple starts; n = 1
// delegates to solve_partialA.  For these solutions p_star is the chosen
// risk probability and x_star the implied cost x(p0 - p_star).
EquilibriumSet solve_partialB(const MarketParams& params, const InvestmentCostFunction& cost,
                              double deductible);

// Runs cases 1-3 and fills the lemma orderings; the lemma-1/2 checks run
// against every case-3 equilibrium, not just the canonical one.
ComparisonReport compare_cases(const MarketParams& params);

}  // namespace cyberins

#endif
