#include "cyberins/risk.hpp"

#include <cmath>
#include <string>

namespace cyberins {

RiskFunction RiskFunction::exponential(double p0, double lambda) {
    RiskFunction rf{RiskFamily::Exponential, p0, lambda};
    rf.validate();
    return rf;
}

RiskFunction RiskFunction::power(double p0, double gamma) {
    RiskFunction rf{RiskFamily::Power, p0, gamma};
    rf.validate();
    return rf;
}

void RiskFunction::validate() const {
    if (!(p0 > 0.0) || !(p0 <= 1.0))
        throw std::invalid_argument("RiskFunction: p0 must lie in (0, 1], got " + std::to_string(p0));
    if (!(rate > 0.0))
        throw std::invalid_argument("RiskFunction: rate must be positive, got " + std::to_string(rate));
}

namespace {
void check_nonneg(double x) {
    if (!(x >= 0.0))
        throw std::invalid_argument("RiskFunction: investment must be non-negative, got " + std::to_string(x));
}
}  // namespace

double RiskFunction::prob(double x) const {
    check_nonneg(x);
    switch (family) {
        case RiskFamily::Exponential: return p0 * std::exp(-rate * x);
        case RiskFamily::Power: return p0 * std::pow(1.0 + x, -rate);
    }
    throw std::logic_error("RiskFunction: bad family");
}

double RiskFunction::dprob(double x) const {
    check_nonneg(x);
    switch (family) {
        case RiskFamily::Exponential: return -rate * p0 * std::exp(-rate * x);
        case RiskFamily::Power: return -rate * p0 * std::pow(1.0 + x, -rate - 1.0);
    }
    throw std::logic_error("RiskFunction: bad family");
}

double RiskFunction::d2prob(double x) const {
    check_nonneg(x);
    switch (family) {
        case RiskFamily::Exponential: return rate * rate * p0 * std::exp(-rate * x);
        case RiskFamily::Power: return rate * (rate + 1.0) * p0 * std::pow(1.0 + x, -rate - 2.0);
    }
    throw std::logic_error("RiskFunction: bad family");
}

double RiskFunction::investment_for(double target) const {
    if (!(target > 0.0) || target > p0)
        throw std::invalid_argument("RiskFunction: inverse target must lie in (0, p0]");
    switch (family) {
        case RiskFamily::Exponential: return std::log(p0 / target) / rate;
        case RiskFamily::Power: return std::pow(p0 / target, 1.0 / rate) - 1.0;
    }
    throw std::logic_error("RiskFunction: bad family");
}

double RiskFunction::scan_limit(double tail) const {
    if (tail >= p0) return 1.0;  // already negligible at x = 0; keep a token window
    return std::min(kMaxInvestment, investment_for(tail));
}

UtilityFunction UtilityFunction::linear() { return UtilityFunction{UtilityFamily::Linear, 0.0, 0.0}; }

UtilityFunction UtilityFunction::exponential_concave(double a) {
    UtilityFunction u{UtilityFamily::ExponentialConcave, a, 0.0};
    u.validate();
    return u;
}

UtilityFunction UtilityFunction::with_reference(double wref) const {
    UtilityFunction u = *this;
    u.reference = wref;
    return u;
}

void UtilityFunction::validate() const {
    if (!(aversion >= 0.0))
        throw std::invalid_argument("UtilityFunction: aversion must be non-negative");
    if (family == UtilityFamily::ExponentialConcave && !(aversion > 0.0))
        throw std::invalid_argument("UtilityFunction: ExponentialConcave requires aversion > 0");
}

double UtilityFunction::value(double w) const {
    const double s = w - reference;
    if (family == UtilityFamily::Linear) return s;
    return (1.0 - std::exp(-aversion * s)) / aversion;
}

double UtilityFunction::deriv(double w) const {
    if (family == UtilityFamily::Linear) return 1.0;
    return std::exp(-aversion * (w - reference));
}

double UtilityFunction::deriv2(double w) const {
    if (family == UtilityFamily::Linear) return 0.0;
    return -aversion * std::exp(-aversion * (w - reference));
}

double InvestmentCostFunction::value(double dp) const { return c1 * dp + c2 * dp * dp; }
double InvestmentCostFunction::deriv(double dp) const { return c1 + 2.0 * c2 * dp; }
double InvestmentCostFunction::deriv2(double) const { return 2.0 * c2; }

void InvestmentCostFunction::validate() const {
    if (!(c1 > 0.0) || !(c2 > 0.0))
        throw std::invalid_argument("InvestmentCostFunction: coefficients must be positive");
}

}  // namespace cyberins
