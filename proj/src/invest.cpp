#include "cyberins/invest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cyberins/validate.hpp"

namespace cyberins {

namespace {

constexpr double kFocTol = 1e-8;
constexpr double kFixedPointTol = 1e-10;

// Bisection on a bracketing interval; assumes f(lo) and f(hi) differ in sign.
double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Sign-change scan over [lo, hi] followed by bisection refinement.
std::vector<double> find_roots(const std::function<double(double)>& f, double lo, double hi,
                               int scan_points) {
    std::vector<double> roots;
    const double step = (hi - lo) / scan_points;
    double xa = lo, fa = f(lo);
    for (int i = 1; i <= scan_points; ++i) {
        const double xb = lo + step * i;
        const double fb = f(xb);
        if (fa == 0.0) {
            roots.push_back(xa);
        } else if ((fa > 0.0) != (fb > 0.0)) {
            roots.push_back(bisect(f, xa, xb));
        }
        xa = xb;
        fa = fb;
    }
    if (fa == 0.0) roots.push_back(xa);
    // merge near-duplicates from exact-zero hits
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                roots.end());
    return roots;
}

double case2_objective(const MarketParams& params, double x) {
    const double p = params.risk.prob(x);
    return params.w0 - x - (1.0 - std::pow(1.0 - p, params.n)) * params.R;
}

}  // namespace

double lemma3_threshold(int n) {
    if (n < 2) throw std::invalid_argument("lemma3_threshold: n must be >= 2");
    return 1.0 - std::pow(1.0 / n, 1.0 / (n - 1.0));
}

InvestmentSolution solve_case1(const MarketParams& params) {
    params.validate();
    const auto& rf = params.risk;
    const double R = params.R;
    auto g = [&](double x) { return foc_residual(1, params, x); };

    InvestmentSolution sol;
    if (g(0.0) <= 0.0) {  // p'(0) R >= -1: marginal benefit never covers the cost
        sol.x_star = 0.0;
        sol.p_star = rf.p0;
        sol.boundary = Boundary::ZeroInvestment;
        sol.foc_residual = g(0.0);
        sol.objective_value = params.w0 - rf.p0 * R;
        return sol;
    }
    const double hi = rf.scan_limit();
    if (g(hi) > 0.0)
        throw std::runtime_error("solve_case1: FOC has no sign change on [0, x_max]");
    sol.x_star = bisect(g, 0.0, hi);
    sol.p_star = rf.prob(sol.x_star);
    sol.boundary = Boundary::Interior;
    sol.foc_residual = g(sol.x_star);
    sol.objective_value = params.w0 - sol.x_star - sol.p_star * R;
    return sol;
}

InvestmentSolution solve_case2(const MarketParams& params) {
    params.validate();
    if (params.n == 1) return solve_case1(params);
    const auto& rf = params.risk;
    auto g = [&](double x) { return foc_residual(2, params, x); };

    InvestmentSolution sol;
    if (g(0.0) <= 0.0) {
        sol.x_star = 0.0;
        sol.p_star = rf.p0;
        sol.boundary = Boundary::ZeroInvestment;
        sol.foc_residual = g(0.0);
        sol.objective_value = case2_objective(params, 0.0);
        return sol;
    }
    const double hi = rf.scan_limit();
    const auto roots = find_roots(g, 0.0, hi, 100000);
    if (roots.empty())
        throw std::runtime_error("solve_case2: FOC has no root despite g(0) > 0");
    // several stationary points are possible; take the best one
    double best_x = roots.front(), best_v = case2_objective(params, roots.front());
    for (double r : roots) {
        const double v = case2_objective(params, r);
        if (v > best_v) {
            best_v = v;
            best_x = r;
        }
    }
    sol.x_star = best_x;
    sol.p_star = rf.prob(best_x);
    sol.boundary = Boundary::Interior;
    sol.foc_residual = g(best_x);
    sol.objective_value = best_v;
    return sol;
}

EquilibriumSet solve_case3(const MarketParams& params) {
    params.validate();
    if (params.n < 2) throw std::invalid_argument("solve_case3: n must be >= 2");
    const auto& rf = params.risk;
    const double R = params.R;
    const double n = params.n;
    auto g = [&](double x) { return foc_residual(3, params, x); };
    const double hi = rf.scan_limit();

    std::vector<double> candidates;
    if (g(0.0) <= 0.0) candidates.push_back(0.0);  // no unilateral incentive to invest
    for (double r : find_roots(g, 0.0, hi, 100000))
        if (r > 1e-12) candidates.push_back(r);

    EquilibriumSet set;
    for (double xstar : candidates) {
        // unilateral deviation check: best response against the others at xstar
        const double others = std::pow(1.0 - rf.prob(xstar), n - 1.0);
        auto payoff = [&](double y) {
            return params.w0 - y - (1.0 - (1.0 - rf.prob(y)) * others) * R;
        };
        const GridResult br = grid_argmax(payoff, 0.0, hi, 2000, 2);
        if (br.value > payoff(xstar) + 1e-6) continue;  // not a best response

        InvestmentSolution eq;
        eq.x_star = xstar;
        eq.p_star = rf.prob(xstar);
        eq.boundary = xstar == 0.0 ? Boundary::ZeroInvestment : Boundary::Interior;
        eq.foc_residual = g(xstar);
        eq.objective_value = params.w0 - xstar - (1.0 - std::pow(1.0 - eq.p_star, n)) * R;
        set.equilibria.push_back(eq);
    }
    if (set.equilibria.empty())
        throw std::runtime_error("solve_case3: no symmetric equilibrium found");
    std::sort(set.equilibria.begin(), set.equilibria.end(),
              [](const auto& a, const auto& b) { return a.x_star < b.x_star; });
    set.count = static_cast<int>(set.equilibria.size());
    set.selected = 0;
    return set;
}

InvestmentSolution solve_partialA(const MarketParams& params, const InvestmentCostFunction& cost,
                                  double deductible) {
    params.validate();
    cost.validate();
    const double R = params.R;
    if (!(deductible > 0.0) || !(deductible < R))
        throw std::invalid_argument("solve_partialA: deductible must lie in (0, R)");
    const double p0 = params.risk.p0;
    const double benefit = R - deductible;  // marginal premium saving per unit of dp

    InvestmentSolution sol;
    const double dp_raw = (benefit - cost.c1) / (2.0 * cost.c2);
    double dp;
    if (dp_raw <= 0.0) {
        dp = 0.0;
        sol.boundary = Boundary::ZeroInvestment;
    } else if (dp_raw >= p0) {
        dp = p0;
        sol.boundary = Boundary::FullElimination;
    } else {
        dp = dp_raw;
        sol.boundary = Boundary::Interior;
    }
    sol.p_star = p0 - dp;
    sol.x_star = cost.value(dp);
    const double wealth = params.w0 - sol.x_star - sol.p_star * benefit;
    sol.objective_value = params.util.value(wealth);
    // derivative of U(w0 - x(p0-p) - p(R-D)) with respect to p at p_star
    sol.foc_residual = params.util.deriv(wealth) * (cost.deriv(dp) - benefit);
    return sol;
}

EquilibriumSet solve_partialB(const MarketParams& params, const InvestmentCostFunction& cost,
                              double deductible) {
    params.validate();
    cost.validate();
    const double R = params.R;
    if (!(deductible > 0.0) || !(deductible < R))
        throw std::invalid_argument("solve_partialB: deductible must lie in (0, R)");
    if (params.n == 1) {  // degenerate single-user game
        EquilibriumSet set;
        set.equilibria.push_back(solve_partialA(params, cost, deductible));
        set.count = 1;
        set.selected = 0;
        return set;
    }

    const double p0 = params.risk.p0;
    const double n = params.n;
    const UtilityFunction u = params.util.with_reference(params.w0);
    const double cover = R - deductible;

    auto payoff = [&](double pi, double pj) {
        const double q = std::pow(1.0 - pj, n - 1.0);          // others all safe
        const double ploss = 1.0 - (1.0 - pi) * q;             // joint loss probability
        const double a = params.w0 - cost.value(p0 - pi) - ploss * cover;
        return (1.0 - ploss) * u.value(a) + ploss * u.value(a - deductible);
    };
    auto dpayoff = [&](double pi, double pj) {
        const double q = std::pow(1.0 - pj, n - 1.0);
        const double ploss = 1.0 - (1.0 - pi) * q;
        const double a = params.w0 - cost.value(p0 - pi) - ploss * cover;
        const double da = cost.deriv(p0 - pi) - q * cover;
        return q * (u.value(a - deductible) - u.value(a)) +
               ((1.0 - ploss) * u.deriv(a) + ploss * u.deriv(a - deductible)) * da;
    };

    auto best_response = [&](double pj) {
        const GridResult coarse =
            grid_argmax([&](double pi) { return payoff(pi, pj); }, 0.0, p0, 2000, 2);
        double arg = coarse.arg;
        // derivative polish when the coarse argmax is interior and bracketed
        const double delta = p0 / 2000.0;
        const double lo = std::max(0.0, arg - delta), hi = std::min(p0, arg + delta);
        const double dlo = dpayoff(lo, pj), dhi = dpayoff(hi, pj);
        if ((dlo > 0.0) != (dhi > 0.0))
            arg = bisect([&](double pi) { return dpayoff(pi, pj); }, lo, hi);
        return arg;
    };

    std::vector<double> fixed_points;
    std::ostringstream trail;
    const double starts[] = {p0, 0.5 * p0, 0.0};
    bool any_converged = false;
    for (double start : starts) {
        double p = start;
        bool converged = false;
        for (int it = 0; it < 10000; ++it) {
            const double next = 0.5 * p + 0.5 * best_response(p);
            if (std::abs(next - p) < kFixedPointTol) {
                p = next;
                converged = true;
                break;
            }
            p = next;
        }
        trail << " start=" << start << " -> " << p;
        if (!converged) continue;
        any_converged = true;
        // polish interior fixed points on the symmetric first-order condition
        if (p > 1e-9 && p < p0 - 1e-9) {
            auto sym = [&](double q) { return dpayoff(q, q); };
            double lo = std::max(0.0, p - 1e-4), hi = std::min(p0, p + 1e-4);
            if ((sym(lo) > 0.0) != (sym(hi) > 0.0)) p = bisect(sym, lo, hi);
        }
        const bool dup = std::any_of(fixed_points.begin(), fixed_points.end(),
                                     [&](double q) { return std::abs(q - p) < 1e-8; });
        if (!dup) fixed_points.push_back(p);
    }
    if (!any_converged)
        throw std::runtime_error("solve_partialB: best-response iteration did not converge;" +
                                 trail.str());

    EquilibriumSet set;
    for (double p : fixed_points) {
        // deviation check against the grid oracle
        const double br = best_response(p);
        if (payoff(br, p) > payoff(p, p) + 1e-9) continue;

        InvestmentSolution eq;
        eq.p_star = p;
        eq.x_star = cost.value(p0 - p);
        eq.objective_value = payoff(p, p);
        eq.foc_residual = dpayoff(p, p);
        if (p <= 1e-9)
            eq.boundary = Boundary::FullElimination;
        else if (p >= p0 - 1e-9)
            eq.boundary = Boundary::ZeroInvestment;
        else
            eq.boundary = Boundary::Interior;
        set.equilibria.push_back(eq);
    }
    if (set.equilibria.empty())
        throw std::runtime_error("solve_partialB: no fixed point survived the deviation check;" +
                                 trail.str());
    std::sort(set.equilibria.begin(), set.equilibria.end(),
              [](const auto& a, const auto& b) { return a.x_star < b.x_star; });
    set.count = static_cast<int>(set.equilibria.size());
    set.selected = 0;
    return set;
}

ComparisonReport compare_cases(const MarketParams& params) {
    if (params.n < 2) throw std::invalid_argument("compare_cases: n must be >= 2");
    const InvestmentSolution c1 = solve_case1(params);
    const InvestmentSolution c2 = solve_case2(params);
    const EquilibriumSet c3 = solve_case3(params);

    ComparisonReport rep;
    rep.x_case1 = c1.x_star;
    rep.x_case2 = c2.x_star;
    rep.x_case3 = c3.canonical().x_star;
    rep.threshold = lemma3_threshold(params.n);
    rep.lemma1_holds = true;
    rep.lemma2_holds = true;
    for (const auto& eq : c3.equilibria) {
        if (eq.x_star > c1.x_star + kFocTol) rep.lemma1_holds = false;
        if (eq.x_star > c2.x_star + kFocTol) rep.lemma2_holds = false;
    }
    rep.lemma3_precondition = params.risk.p0 < rep.threshold;
    rep.lemma3_holds = rep.lemma3_precondition && c2.x_star >= c1.x_star - kFocTol;
    return rep;
}

}  // namespace cyberins
