#pragma once

#include "sicsnc/geometry.hpp"
#include "sicsnc/pathloss.hpp"
#include "sicsnc/regulation.hpp"

#include <optional>
#include <vector>

namespace sicsnc {

struct LinkParams {
    double P0 = 1.0;       // emission power, watts
    double N0 = 0.1;       // noise power, watts
    double eta0 = 0.1;     // linear SrINR threshold
    double m = 1000.0;     // message size, bits
    double alpha = 0.5;    // SIR/SNR split in (0,1)

    double gamma0() const { return N0 / P0; }
};

// Prop.-1 style derived parameters: the residual interference beyond r is
// capped by ell(r) (sigma_b + rho_b r + nu_b r^2).
struct BetaRegulationParams {
    double sigma_beta = 0.0;
    double rho_beta = 0.0;
    double nu_beta = 0.0;

    double polynomial(double r) const { return sigma_beta + r * (rho_beta + r * nu_beta); }
};

// sigma_b = sigma C/C', rho_b = (C/C') rho/(beta-1), nu_b = (C/C') 2 nu/(beta-2).
// The envelope ratio multiplies from the C-upper-bound / C'-lower-bound steps
// of the derivation; it collapses to 1 for the exact power-law model.
BetaRegulationParams derive_beta_params(const RegulationParams& params,
                                        const PathLossModel& model);

// Residual interference under SIC at the origin receiver: sum of ell(|w|) over
// transmitters strictly farther than |x| (closed ball removed, so equidistant
// points are excluded).
double residual_interference(Point x, const PointSample& sample, const PathLossModel& model);

// SrINR(x, Phi) = ell(|x|) / (residual interference + gamma0) for the
// Palm-centered receiver at the origin.
double srinr(Point x, const PointSample& sample, const PathLossModel& model, double gamma0);

// Deterministic interference envelope ell(max(r, r0)) (sigma_b + rho_b r + nu_b r^2).
// Stated for r > r0; below r0 the path loss factor is held at ell(r0), a
// conservative extension of the same bound.
double interference_bound(double r, const BetaRegulationParams& bp, const PathLossModel& model);

// eta(r) = (gamma0/ell(r) + sigma_b + rho_b r + nu_b r^2)^{-1}, the
// deterministic SrINR lower envelope at distance r. Strictly decreasing.
double eta_envelope(double r, const BetaRegulationParams& bp, const PathLossModel& model,
                    double gamma0);

// Coverage-distance lower bound tau0: min of the SIR branch (positive root of
// sigma_b + rho_b r + nu_b r^2 = alpha/eta0) and the SNR branch
// r0 ((1-alpha)/(C eta0 gamma0))^{1/beta}. Empty when the quadratic has no
// positive root, i.e. alpha/eta0 <= sigma_b.
std::optional<double> coverage_distance_bound(const BetaRegulationParams& bp,
                                              const PathLossModel& model,
                                              const LinkParams& link);

// alpha in (0,1) maximizing tau0; empty when no alpha is feasible.
std::optional<double> optimal_coverage_alpha(const BetaRegulationParams& bp,
                                             const PathLossModel& model,
                                             const LinkParams& link);

// sup{ |x - y| : x decodable by y at threshold eta0 }, 0 when no transmitter
// meets the threshold (empty-set convention).
double coverage_distance_empirical(Point y, const PointSample& transmitters,
                                   const PathLossModel& model, const LinkParams& link);

// Indices of transmitters strictly within tau0 of at least one receiver
// (the union of open balls of Eq.-style coverage).
std::vector<std::size_t> covered_set(const PointSample& transmitters,
                                     const PointSample& receivers, double tau0);

} // namespace sicsnc
