#pragma once

#include "sicsnc/geometry.hpp"
#include "sicsnc/pathloss.hpp"

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace sicsnc {

// Ring-regulation triple: counts in any open ring O(r,R) around the typical
// receiver are capped by sigma + rho (R-r) + nu (R^2 - r^2).
struct RegulationParams {
    double sigma = 0.0;   // dimensionless count
    double rho = 0.0;     // per meter
    double nu = 0.0;      // per meter^2
};

// Joint ring+void feasibility flag: the regimes can coexist when tau0 > nu,
// equivalently 2 eta0 > (nu_b^{3/2} + nu_b rho_b + sigma_b)^{-1}.
bool joint_ring_void_feasible(const RegulationParams& params, double tau0);

struct RingViolation {
    Point center{};
    double r = 0.0;
    double R = 0.0;
    long count = 0;
    double bound = 0.0;
};

struct RegulationReport {
    std::size_t checked_pairs = 0;
    std::vector<RingViolation> violations;
    double max_slack = -std::numeric_limits<double>::infinity();  // max(count - bound)

    bool regulated() const { return violations.empty(); }
};

// Number of points w with r < |w - center| < R (open ring: the closed inner
// ball is excluded, so ties at exactly r or R do not count).
long ring_count(const PointSample& sample, Point center, double r, double R);

// Check count <= sigma + rho (R-r) + nu (R^2-r^2) for every center and every
// grid pair r < R. The grid must be strictly increasing and start at 0.
RegulationReport check_ring_regulation(const PointSample& sample, const RegulationParams& params,
                                       std::span<const Point> centers,
                                       std::span<const double> radius_grid);

// Exact verification: counts only change at the observed distances, so rings
// between every pair of distinct observed distances (limit form: count on
// (d_i, d_j] against the bound at (d_i, d_j)) decide regulation everywhere.
RegulationReport check_ring_regulation_exact(const PointSample& sample,
                                             const RegulationParams& params, Point center);

// Ring parameters of a hardcore process with core distance H:
// (2 pi, pi^2/(sqrt(3) H), pi^2/(4 sqrt(3) H^2)).
RegulationParams hardcore_ring_params(double hardcore_distance);

// Sum of ell(|w - center|) over the open ring (R may be +infinity).
double shot_noise_sum(const PointSample& sample, Point center, const PathLossModel& model,
                      double r, double R);

// Right side of the shot-noise regulation inequality:
// sigma ell(r) + rho int_r^R ell + 2 nu int_r^R s ell(s) ds,
// in closed form for the max{1, r/r0}^{-beta} family.
double shot_noise_bound_rhs(const RegulationParams& params, const PathLossModel& model,
                            double r, double R);

// Same bound for an arbitrary non-increasing path loss, by adaptive quadrature.
double shot_noise_bound_rhs(const RegulationParams& params,
                            const std::function<double(double)>& ell, double r, double R,
                            double tol);

// tau-void regulation: every transmitter in the analysis region must have at
// least one receiver strictly within tau. Violations are reported with the
// transmitter as center, (r,R) = (0,tau), count 0 against bound 1.
RegulationReport check_void_regulation(const PointSample& receivers,
                                       const PointSample& transmitters, double tau);

} // namespace sicsnc
