#include "sicsnc/regulation.hpp"

#include "sicsnc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sicsnc {

namespace {

double ring_bound(const RegulationParams& p, double r, double R) {
    return p.sigma + p.rho * (R - r) + p.nu * (R * R - r * r);
}

std::vector<double> sorted_distances(const PointSample& sample, Point center) {
    std::vector<double> d;
    d.reserve(sample.points.size());
    for (const auto& p : sample.points) d.push_back(distance(p, center));
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

bool joint_ring_void_feasible(const RegulationParams& params, double tau0) {
    return tau0 > params.nu;
}

long ring_count(const PointSample& sample, Point center, double r, double R) {
    if (!(r >= 0.0) || !(R > r))
        throw std::invalid_argument("ring_count: need 0 <= r < R");
    long n = 0;
    for (const auto& p : sample.points) {
        const double d = distance(p, center);
        if (d > r && d < R) ++n;
    }
    return n;
}

RegulationReport check_ring_regulation(const PointSample& sample, const RegulationParams& params,
                                       std::span<const Point> centers,
                                       std::span<const double> radius_grid) {
    if (radius_grid.size() < 2 || radius_grid.front() != 0.0)
        throw std::invalid_argument("check_ring_regulation: grid must start at 0");
    for (std::size_t i = 1; i < radius_grid.size(); ++i)
        if (!(radius_grid[i] > radius_grid[i - 1]))
            throw std::invalid_argument("check_ring_regulation: grid must be strictly increasing");

    RegulationReport report;
    for (const auto& center : centers) {
        const auto d = sorted_distances(sample, center);
        for (std::size_t i = 0; i + 1 < radius_grid.size(); ++i) {
            for (std::size_t j = i + 1; j < radius_grid.size(); ++j) {
                const double r = radius_grid[i];
                const double R = radius_grid[j];
                const auto lo = std::upper_bound(d.begin(), d.end(), r);
                const auto hi = std::lower_bound(d.begin(), d.end(), R);
                const long count = static_cast<long>(hi - lo);
                const double bound = ring_bound(params, r, R);
                ++report.checked_pairs;
                report.max_slack = std::max(report.max_slack, count - bound);
                if (count > bound)
                    report.violations.push_back({center, r, R, count, bound});
            }
        }
    }
    return report;
}

RegulationReport check_ring_regulation_exact(const PointSample& sample,
                                             const RegulationParams& params, Point center) {
    auto d = sorted_distances(sample, center);
    // distinct radii: 0 plus the observed distances
    std::vector<double> radii;
    radii.push_back(0.0);
    for (const double v : d)
        if (radii.back() != v) radii.push_back(v);

    // counts on (radii[i], radii[j]] decide every continuum ring; the bound is
    // taken at (radii[i], radii[j]) which is its limit from above in R
    std::vector<std::size_t> cum(radii.size());  // # of distances <= radii[k]
    for (std::size_t k = 0; k < radii.size(); ++k)
        cum[k] = static_cast<std::size_t>(
            std::upper_bound(d.begin(), d.end(), radii[k]) - d.begin());

    RegulationReport report;
    for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
        for (std::size_t j = i + 1; j < radii.size(); ++j) {
            const long count = static_cast<long>(cum[j] - cum[i]);
            const double bound = ring_bound(params, radii[i], radii[j]);
            ++report.checked_pairs;
            report.max_slack = std::max(report.max_slack, count - bound);
            if (count > bound)
                report.violations.push_back({center, radii[i], radii[j], count, bound});
        }
    }
    return report;
}

RegulationParams hardcore_ring_params(double hardcore_distance) {
    if (!(hardcore_distance > 0.0))
        throw std::invalid_argument("hardcore_ring_params: need H > 0");
    const double pi = std::numbers::pi;
    const double H = hardcore_distance;
    return {2.0 * pi, pi * pi / (std::sqrt(3.0) * H), pi * pi / (4.0 * std::sqrt(3.0) * H * H)};
}

double shot_noise_sum(const PointSample& sample, Point center, const PathLossModel& model,
                      double r, double R) {
    if (!(r >= 0.0) || !(R > r))
        throw std::invalid_argument("shot_noise_sum: need 0 <= r < R");
    double sum = 0.0;
    for (const auto& p : sample.points) {
        const double d = distance(p, center);
        if (d > r && d < R) sum += model(d);
    }
    return sum;
}

namespace {

// int_r^R max{1, s/r0}^{-beta} ds
double int_ell(const PathLossModel& m, double r, double R) {
    double flat = 0.0;
    if (r < m.r0) flat = std::min(R, m.r0) - r;
    if (R <= m.r0) return flat;
    const double a = std::max(r, m.r0);
    const double e = 1.0 - m.beta;
    const double scale = std::pow(m.r0, m.beta);
    double tail;
    if (std::isinf(R)) {
        if (!(m.beta > 1.0))
            throw std::domain_error("shot_noise_bound_rhs: integral diverges for beta <= 1");
        tail = -std::pow(a, e) / e;
    } else {
        tail = (std::pow(R, e) - std::pow(a, e)) / e;
    }
    return flat + scale * tail;
}

// int_r^R s max{1, s/r0}^{-beta} ds
double int_s_ell(const PathLossModel& m, double r, double R) {
    double flat = 0.0;
    if (r < m.r0) {
        const double b = std::min(R, m.r0);
        flat = 0.5 * (b * b - r * r);
    }
    if (R <= m.r0) return flat;
    const double a = std::max(r, m.r0);
    const double e = 2.0 - m.beta;
    const double scale = std::pow(m.r0, m.beta);
    double tail;
    if (std::isinf(R)) {
        if (!(m.beta > 2.0))
            throw std::domain_error("shot_noise_bound_rhs: integral diverges for beta <= 2");
        tail = -std::pow(a, e) / e;
    } else {
        tail = (std::pow(R, e) - std::pow(a, e)) / e;
    }
    return flat + scale * tail;
}

} // namespace

double shot_noise_bound_rhs(const RegulationParams& params, const PathLossModel& model,
                            double r, double R) {
    if (!(r >= 0.0) || !(R > r))
        throw std::invalid_argument("shot_noise_bound_rhs: need 0 <= r < R");
    return params.sigma * model(r) + params.rho * int_ell(model, r, R)
         + 2.0 * params.nu * int_s_ell(model, r, R);
}

double shot_noise_bound_rhs(const RegulationParams& params,
                            const std::function<double(double)>& ell, double r, double R,
                            double tol) {
    if (!(r >= 0.0) || !(R > r))
        throw std::invalid_argument("shot_noise_bound_rhs: need 0 <= r < R");
    const double i1 = adaptive_quadrature(ell, r, R, tol);
    const double i2 = adaptive_quadrature([&](double s) { return s * ell(s); }, r, R, tol);
    return params.sigma * ell(r) + params.rho * i1 + 2.0 * params.nu * i2;
}

RegulationReport check_void_regulation(const PointSample& receivers,
                                       const PointSample& transmitters, double tau) {
    if (!(tau > 0.0))
        throw std::invalid_argument("check_void_regulation: need tau > 0");
    PointGrid grid(receivers.points, tau);
    RegulationReport report;
    for (const auto& x : transmitters.points) {
        if (!transmitters.window.analysis_contains(x)) continue;
        ++report.checked_pairs;
        long covering = 0;
        grid.for_each_within(x, tau, [&](std::size_t) { ++covering; });
        report.max_slack = std::max(report.max_slack, 1.0 - static_cast<double>(covering));
        if (covering == 0)
            report.violations.push_back({x, 0.0, tau, 0, 1.0});
    }
    return report;
}

} // namespace sicsnc
