#include "sicsnc/channel.hpp"

#include "sicsnc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sicsnc {

BetaRegulationParams derive_beta_params(const RegulationParams& params,
                                        const PathLossModel& model) {
    if (!(model.beta > 2.0))
        throw std::domain_error("derive_beta_params: need beta > 2");
    const double ratio = model.C / model.Cprime;
    return {ratio * params.sigma,
            ratio * params.rho / (model.beta - 1.0),
            ratio * 2.0 * params.nu / (model.beta - 2.0)};
}

double residual_interference(Point x, const PointSample& sample, const PathLossModel& model) {
    const double r = norm(x);
    double sum = 0.0;
    for (const auto& w : sample.points) {
        const double d = norm(w);
        if (d > r) sum += model(d);
    }
    return sum;
}

double srinr(Point x, const PointSample& sample, const PathLossModel& model, double gamma0) {
    if (gamma0 < 0.0) throw std::invalid_argument("srinr: gamma0 must be >= 0");
    const double interference = residual_interference(x, sample, model);
    const double denom = interference + gamma0;
    if (denom == 0.0)
        throw std::domain_error("srinr: zero noise and zero residual interference");
    return model(norm(x)) / denom;
}

double interference_bound(double r, const BetaRegulationParams& bp, const PathLossModel& model) {
    return model(std::max(r, model.r0)) * bp.polynomial(r);
}

double eta_envelope(double r, const BetaRegulationParams& bp, const PathLossModel& model,
                    double gamma0) {
    return 1.0 / (gamma0 / model(r) + bp.polynomial(r));
}

std::optional<double> coverage_distance_bound(const BetaRegulationParams& bp,
                                              const PathLossModel& model,
                                              const LinkParams& link) {
    if (!(link.alpha > 0.0) || !(link.alpha < 1.0))
        throw std::invalid_argument("coverage_distance_bound: need 0 < alpha < 1");
    const double target = link.alpha / link.eta0;
    if (target <= bp.sigma_beta) return std::nullopt;  // quadratic has no positive root

    double sir;
    if (bp.nu_beta > 0.0) {
        const double disc = bp.rho_beta * bp.rho_beta
                          + 4.0 * bp.nu_beta * (target - bp.sigma_beta);
        sir = (std::sqrt(disc) - bp.rho_beta) / (2.0 * bp.nu_beta);
    } else if (bp.rho_beta > 0.0) {
        sir = (target - bp.sigma_beta) / bp.rho_beta;
    } else {
        sir = std::numeric_limits<double>::infinity();
    }

    // SNR branch: ell(r) >= eta0 gamma0 / (1-alpha)
    const double q = model.C * link.eta0 * link.gamma0() / (1.0 - link.alpha);
    double snr;
    if (q >= 1.0)
        snr = 0.0;  // even ell(0) = 1 fails the noise requirement
    else
        snr = model.r0 * std::pow(1.0 / q, 1.0 / model.beta);

    return std::min(sir, snr);
}

std::optional<double> optimal_coverage_alpha(const BetaRegulationParams& bp,
                                             const PathLossModel& model,
                                             const LinkParams& link) {
    const double alpha_min = link.eta0 * bp.sigma_beta;  // below this the quadratic is infeasible
    if (alpha_min >= 1.0 - 1e-9) return std::nullopt;
    const double lo = std::max(alpha_min * (1.0 + 1e-12), 1e-9);
    auto tau_of = [&](double a) {
        LinkParams l = link;
        l.alpha = a;
        const auto t = coverage_distance_bound(bp, model, l);
        return t ? *t : 0.0;
    };
    const auto best = maximize_1d(tau_of, std::max(lo, 1e-9), 1.0 - 1e-9, 1e-10, 128);
    if (!(best.max > 0.0)) return std::nullopt;
    return best.argmax;
}

double coverage_distance_empirical(Point y, const PointSample& transmitters,
                                   const PathLossModel& model, const LinkParams& link) {
    const std::size_t n = transmitters.points.size();
    std::vector<std::pair<double, double>> by_dist;  // (distance, ell)
    by_dist.reserve(n);
    for (const auto& p : transmitters.points) {
        const double d = distance(p, y);
        by_dist.emplace_back(d, model(d));
    }
    std::sort(by_dist.begin(), by_dist.end());

    // suffix sums of ell over strictly farther points (equal distances share
    // the same interferer set)
    double tau = 0.0;
    double suffix = 0.0;
    std::size_t i = n;
    while (i > 0) {
        std::size_t j = i;
        while (j > 0 && by_dist[j - 1].first == by_dist[i - 1].first) --j;
        for (std::size_t k = j; k < i; ++k) {
            const double s = by_dist[k].second / (suffix + link.gamma0());
            if (s >= link.eta0) {
                tau = std::max(tau, by_dist[k].first);
                return tau;  // sorted descending from here on, sup reached
            }
        }
        for (std::size_t k = j; k < i; ++k) suffix += by_dist[k].second;
        i = j;
    }
    return tau;
}

std::vector<std::size_t> covered_set(const PointSample& transmitters,
                                     const PointSample& receivers, double tau0) {
    if (!(tau0 > 0.0)) throw std::invalid_argument("covered_set: need tau0 > 0");
    PointGrid grid(receivers.points, tau0);
    std::vector<std::size_t> covered;
    for (std::size_t i = 0; i < transmitters.points.size(); ++i) {
        bool hit = false;
        grid.for_each_within(transmitters.points[i], tau0, [&](std::size_t) { hit = true; });
        if (hit) covered.push_back(i);
    }
    return covered;
}

} // namespace sicsnc
