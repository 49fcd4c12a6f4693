#include "cyberins/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cyberins/threads.hpp"

namespace cyberins {

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) {
    std::uint64_t h = mix64(seed ^ mix64(trial) ^ mix64(mix64(stream)));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

McReport monte_carlo_wealth(const MarketParams& params, const Eigen::VectorXd& investments,
                            const Contract& contract, std::int64_t trials, std::uint64_t seed) {
    if (trials < 10000)
        throw std::invalid_argument("monte_carlo_wealth: need at least 1e4 trials");
    contract.validate(params.R);
    const int n = static_cast<int>(investments.size());
    if (n == 0) throw std::invalid_argument("monte_carlo_wealth: empty investment vector");

    std::vector<double> probs(n);
    for (int j = 0; j < n; ++j) probs[j] = std::min(params.risk.prob(investments[j]), kProbCeiling);

    const double P = joint_loss_prob(investments, params.risk);
    const double premium = P * contract.coverage;
    const double base = params.w0 - investments[0] - premium;
    const double hit = params.R - contract.coverage;  // deductible suffered on a joint loss

    // Fixed block partition; per-block sums are merged in block order so the
    // result is bit-identical regardless of how blocks map to workers.
    constexpr std::int64_t kBlocks = 512;
    std::vector<double> block_sum(kBlocks, 0.0), block_sum2(kBlocks, 0.0);

    auto run_block = [&](std::int64_t b) {
        const std::int64_t lo = trials * b / kBlocks;
        const std::int64_t hi = trials * (b + 1) / kBlocks;
        double s = 0.0, s2 = 0.0;
        for (std::int64_t t = lo; t < hi; ++t) {
            bool loss = false;
            for (int j = 0; j < n; ++j) {
                if (counter_uniform(seed, static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(j)) < probs[j]) {
                    loss = true;
                    break;
                }
            }
            const double w = loss ? base - hit : base;
            s += w;
            s2 += w * w;
        }
        block_sum[b] = s;
        block_sum2[b] = s2;
    };

    const int workers = std::min<int>(solver_thread_count(), kBlocks);
    if (workers <= 1) {
        for (std::int64_t b = 0; b < kBlocks; ++b) run_block(b);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::int64_t b = w; b < kBlocks; b += workers) run_block(b);
            });
        for (auto& th : pool) th.join();
    }

    double sum = 0.0, sum2 = 0.0;
    for (std::int64_t b = 0; b < kBlocks; ++b) {
        sum += block_sum[b];
        sum2 += block_sum2[b];
    }

    McReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.mean = sum / static_cast<double>(trials);
    const double var = std::max(0.0, (sum2 - sum * sum / static_cast<double>(trials)) /
                                         static_cast<double>(trials - 1));
    rep.std_error = std::sqrt(var / static_cast<double>(trials));
    rep.analytic = expected_realized_wealth(params, investments, contract, 0);
    rep.z_score = rep.std_error > 0.0
                      ? (rep.mean - rep.analytic) / rep.std_error
                      : (rep.mean == rep.analytic ? 0.0 : std::numeric_limits<double>::infinity());
    return rep;
}

GridResult grid_argmax(const std::function<double(double)>& objective, double lower, double upper,
                       int steps, int refine_levels) {
    if (!(lower < upper)) throw std::invalid_argument("grid_argmax: lower must be < upper");
    if (steps < 100) throw std::invalid_argument("grid_argmax: need at least 100 steps");

    double lo = lower, hi = upper;
    int pts = steps;
    GridResult best{lower, -std::numeric_limits<double>::infinity()};
    for (int level = 0; level <= refine_levels; ++level) {
        double step = (hi - lo) / pts;
        int best_i = 0;
        for (int i = 0; i <= pts; ++i) {
            const double x = lo + step * i;
            const double v = objective(x);
            if (!std::isfinite(v))
                throw std::runtime_error("grid_argmax: non-finite objective at x = " + std::to_string(x));
            if (v > best.value) {
                best = {x, v};
                best_i = i;
            }
        }
        lo = std::max(lower, best.arg - step);
        hi = std::min(upper, best.arg + step);
        (void)best_i;
        pts = 20;  // one old step each side at 10x resolution
    }
    return best;
}

GridResultN grid_argmax(const std::function<double(const Eigen::VectorXd&)>& objective,
                        const Eigen::VectorXd& lower, const Eigen::VectorXd& upper, int steps,
                        int refine_levels) {
    const int dim = static_cast<int>(lower.size());
    if (dim == 0 || upper.size() != dim)
        throw std::invalid_argument("grid_argmax: dimension mismatch");
    for (int d = 0; d < dim; ++d)
        if (!(lower[d] < upper[d])) throw std::invalid_argument("grid_argmax: lower must be < upper");
    if (steps < 100) throw std::invalid_argument("grid_argmax: need at least 100 steps");

    Eigen::VectorXd lo = lower, hi = upper;
    int pts = steps;
    GridResultN best{lower, -std::numeric_limits<double>::infinity()};
    Eigen::VectorXd x(dim);
    for (int level = 0; level <= refine_levels; ++level) {
        Eigen::VectorXd step = (hi - lo) / pts;
        std::vector<int> idx(dim, 0);
        bool done = false;
        while (!done) {
            for (int d = 0; d < dim; ++d) x[d] = lo[d] + step[d] * idx[d];
            const double v = objective(x);
            if (!std::isfinite(v))
                throw std::runtime_error("grid_argmax: non-finite objective at grid point (" +
                                         std::to_string(x[0]) + ", ...)");
            if (v > best.value) best = {x, v};
            int d = dim - 1;
            while (d >= 0 && ++idx[d] > pts) idx[d--] = 0;
            done = d < 0;
        }
        for (int d = 0; d < dim; ++d) {
            lo[d] = std::max(lower[d], best.arg[d] - step[d]);
            hi[d] = std::min(upper[d], best.arg[d] + step[d]);
        }
        pts = 20;
    }
    return best;
}

double foc_residual(int case_id, const MarketParams& params, double x) {
    const double R = params.R;
    const double p = params.risk.prob(x);
    const double dp = params.risk.dprob(x);
    const double n = params.n;
    switch (case_id) {
        case 1: return -1.0 - dp * R;
        case 2: return -1.0 - n * dp * std::pow(1.0 - p, n - 1.0) * R;
        case 3: return -1.0 - dp * std::pow(1.0 - p, n - 1.0) * R;
        default:
            throw std::invalid_argument("foc_residual: unknown case id " + std::to_string(case_id));
    }
}

}  // namespace cyberins
