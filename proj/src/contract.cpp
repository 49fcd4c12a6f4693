#include "cyberins/contract.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cyberins {

void participation_bounds(double z, double c, double K, double& p_low, double& p_high) {
    if (!(c > 0.0)) throw std::invalid_argument("participation_bounds: coverage must be positive");
    if (!(z >= 0.0)) throw std::invalid_argument("participation_bounds: premium must be non-negative");
    if (!(K >= 1.0)) throw std::invalid_argument("participation_bounds: K must be >= 1");
    p_low = std::min(z / (K * c), 1.0);
    p_high = std::min(z / c, 1.0);
}

ContractEval evaluate_contract(double w, double R, double K, double z, double c) {
    if (!(R > 0.0) || !(R < w)) throw std::invalid_argument("evaluate_contract: need 0 < R < w");
    if (!(K >= 1.0)) throw std::invalid_argument("evaluate_contract: K must be >= 1");
    if (!(z >= 0.0) || !(c >= 0.0) || c > R)
        throw std::invalid_argument("evaluate_contract: invalid contract");

    ContractEval ev;
    if (c == 0.0) {
        // nobody can be (meaningfully) insured: the band is empty
        ev.p_low = ev.p_high = z == 0.0 ? 0.0 : 1.0;
    } else {
        participation_bounds(z, c, K, ev.p_low, ev.p_high);
    }
    const double pl = ev.p_low, ph = ev.p_high;
    const double sq = ph * ph - pl * pl;
    const double insured = (ph - pl) * (w - z) - K * (R - c) * sq / 2.0;  // band [p_low, p_high]
    const double below = pl * w - K * R * pl * pl / 2.0;                  // no incentive to buy
    const double above = w * (1.0 - ph) - K * R * (1.0 - ph * ph) / 2.0;  // denied by the insurer
    ev.total_welfare = insured + below + above;
    ev.insurer_profit = z * (ph - pl) - c * sq / 2.0;
    return ev;
}

ContractSolution welfare_contract(double w, double R, double K) {
    ContractSolution sol;
    sol.objective = ContractObjective::WelfareMax;
    sol.contract = {R, R};
    sol.p_low = 1.0 / K;
    sol.p_high = 1.0;
    sol.total_welfare = w - R * (2.0 * K - 1.0) / (2.0 * K);
    sol.insurer_profit = R * (K - 1.0) * (K - 1.0) / (2.0 * K * K);

    const ContractEval ev = evaluate_contract(w, R, K, R, R);
    if (std::abs(ev.total_welfare - sol.total_welfare) > 1e-12 * std::max(1.0, std::abs(w)) ||
        std::abs(ev.insurer_profit - sol.insurer_profit) > 1e-12 * std::max(1.0, R))
        throw std::logic_error("welfare_contract: closed form disagrees with evaluate_contract");
    return sol;
}

ContractSolution profit_contract(double w, double R, double K) {
    ContractSolution sol;
    sol.objective = ContractObjective::ProfitMax;
    sol.contract = {R * K * K / (2.0 * K - 1.0), R};
    sol.p_low = K / (2.0 * K - 1.0);
    sol.p_high = 1.0;
    sol.insurer_profit = R * (K - 1.0) * (K - 1.0) / (2.0 * (2.0 * K - 1.0));

    const ContractEval ev = evaluate_contract(w, R, K, sol.contract.premium, sol.contract.coverage);
    if (std::abs(ev.insurer_profit - sol.insurer_profit) > 1e-12 * std::max(1.0, R))
        throw std::logic_error("profit_contract: closed form disagrees with evaluate_contract");
    sol.total_welfare = ev.total_welfare;
    return sol;
}

double welfare_gap(double R, double K) {
    if (!(K >= 1.0)) throw std::invalid_argument("welfare_gap: K must be >= 1");
    const double a = K * K * (3.0 * K - 2.0) / ((2.0 * K - 1.0) * (2.0 * K - 1.0));
    const double b = (2.0 * K - 1.0) / K;
    return 0.5 * R * (a - b);
}

ContractSolution numeric_contract_argmax(double w, double R, double K,
                                         ContractObjective objective) {
    const double uninsured = w - K * R / 2.0;
    const double step0 = R / 2000.0;

    auto score = [&](double z, double c, double& welfare, double& profit) {
        const ContractEval ev = evaluate_contract(w, R, K, z, c);
        welfare = ev.total_welfare;
        profit = ev.insurer_profit;
        if (objective == ContractObjective::WelfareMax)
            return (profit >= -1e-12 && z <= R + 1e-12) ? welfare
                                                        : -std::numeric_limits<double>::infinity();
        return welfare >= uninsured - 1e-9 ? profit : -std::numeric_limits<double>::infinity();
    };

    double best_z = 0.0, best_c = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    // K = 1 makes both objectives flat over whole regions; near-ties resolve
    // toward the largest (c, z), the corner the closed-form contracts sit on.
    const double tie = 1e-9 * std::max(1.0, std::abs(w));
    double zl = 0.0, zh = 1.5 * R, cl = 0.0, ch = R;
    double step = step0;
    for (int level = 0; level < 3; ++level) {
        const int nz = static_cast<int>(std::round((zh - zl) / step));
        const int nc = static_cast<int>(std::round((ch - cl) / step));
        for (int i = 0; i <= nz; ++i) {
            const double z = zl + step * i;
            for (int j = 0; j <= nc; ++j) {
                const double c = cl + step * j;
                double welfare, profit;
                const double v = score(z, c, welfare, profit);
                const bool better = v > best + tie;
                const bool tied = !better && v >= best - tie &&
                                  (c > best_c || (c == best_c && z > best_z));
                if (better || tied) {
                    best = std::max(best, v);
                    best_z = z;
                    best_c = c;
                }
            }
        }
        zl = std::max(0.0, best_z - step);
        zh = std::min(1.5 * R, best_z + step);
        cl = std::max(0.0, best_c - step);
        ch = std::min(R, best_c + step);
        step /= 10.0;
    }

    ContractSolution sol;
    sol.objective = objective;
    sol.contract = {best_z, best_c};
    const ContractEval ev = evaluate_contract(w, R, K, best_z, best_c);
    sol.p_low = ev.p_low;
    sol.p_high = ev.p_high;
    sol.total_welfare = ev.total_welfare;
    sol.insurer_profit = ev.insurer_profit;
    return sol;
}

}  // namespace cyberins
