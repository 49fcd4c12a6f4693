#ifndef CYBERINS_RISK_HPP
#define CYBERINS_RISK_HPP

#include <stdexcept>

namespace cyberins {

// Hard cap on any self-defense investment search. "x = infinity" (total risk
// elimination) is reported as a boundary flag, never as a numeric infinity.
inline constexpr double kMaxInvestment = 1e6;

// Probabilities are clamped below 1 before entering products so that
// 1 - p never underflows to an exact zero factor.
inline constexpr double kProbCeiling = 1.0 - 1e-12;

enum class RiskFamily { Exponential, Power };

// Decreasing convex loss-probability function p(x) of self-defense
// investment x, with closed-form first and second derivatives.
//
//   Exponential: p(x) = p0 * exp(-rate * x)
//   Power:       p(x) = p0 / (1 + x)^rate
struct RiskFunction {
    RiskFamily family = RiskFamily::Exponential;
    double p0 = 0.5;    // risk probability at zero investment, in (0, 1]
    double rate = 1.0;  // lambda (Exponential) or gamma (Power), > 0

    static RiskFunction exponential(double p0, double lambda);
    static RiskFunction power(double p0, double gamma);

    double prob(double x) const;    // p(x), throws std::invalid_argument for x < 0
    double dprob(double x) const;   // p'(x) < 0
    double d2prob(double x) const;  // p''(x) > 0

    // Inverse of prob: the investment x with p(x) = target.
    double investment_for(double target) const;

    // Upper end of any root/argmax scan: the investment beyond which the
    // residual risk (and hence any marginal benefit) is negligible.
    double scan_limit(double tail = 1e-11) const;

    void validate() const;
};

enum class UtilityFamily { Linear, ExponentialConcave };

// Concave utility of wealth.  ExponentialConcave is u(w) = (1 - e^(-a w))/a
// with constant absolute risk aversion a; Linear is the risk-neutral limit.
//
// `reference` shifts the evaluation point: value(w) computes the utility of
// w - reference.  A positive affine transform of an expected-utility
// objective changes no argmax and no participation/incentive comparison, and
// anchoring the exponential at the wealth scale of the problem keeps
// exp(-a w) inside double range for desk-scale wealth and aversion.
struct UtilityFunction {
    UtilityFamily family = UtilityFamily::Linear;
    double aversion = 0.0;   // a >= 0; ignored for Linear
    double reference = 0.0;

    static UtilityFunction linear();
    static UtilityFunction exponential_concave(double a);

    UtilityFunction with_reference(double wref) const;

    double value(double w) const;   // u(w - reference)
    double deriv(double w) const;   // u'  > 0
    double deriv2(double w) const;  // u'' <= 0 (strict for ExponentialConcave)

    void validate() const;
};

// Quadratic cost x(dp) = c1*dp + c2*dp^2 of reducing the risk probability
// by dp (partial-coverage investment problems work in probability space).
struct InvestmentCostFunction {
    double c1 = 1.0;  // > 0
    double c2 = 1.0;  // > 0

    double value(double dp) const;
    double deriv(double dp) const;   // c1 + 2 c2 dp
    double deriv2(double dp) const;  // 2 c2

    void validate() const;
};

}  // namespace cyberins

#endif
