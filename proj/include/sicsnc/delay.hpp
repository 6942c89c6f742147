#pragma once

#include "sicsnc/channel.hpp"

#include <vector>

namespace sicsnc {

struct DelayRecord {
    Point transmitter{};
    double distance = 0.0;
    double srinr = 0.0;          // own SrINR at the typical receiver
    double rate = 0.0;           // bpcu, infimum over the closed ball
    double virtual_delay = 0.0;  // channel uses, m / rate
    double sic_delay = 0.0;      // channel uses, sup of virtual delays in the ball
    double cf_delay = std::numeric_limits<double>::quiet_NaN();
    double analytic_bound = 0.0; // m / log2(1 + eta(distance))
};

// Rate of the link from x to the typical receiver at the origin:
// inf over w with |w| <= |x| (x included) of log2(1 + SrINR(w, Phi)).
double link_rate(Point x, const PointSample& sample, const PathLossModel& model, double gamma0);

// m / R(x, Phi); +infinity when the rate is zero.
double virtual_delay(Point x, const PointSample& sample, const PathLossModel& model,
                     const LinkParams& link);

// sup of virtual delays over the closed ball of radius |x| (x included).
double sic_delay(Point x, const PointSample& sample, const PathLossModel& model,
                 const LinkParams& link);

// Cell-free delay: min over receivers y of the SIC delay of x after Palm
// centering at y; receivers whose SrINR for x falls below eta0 contribute
// +infinity. Returns +infinity when no receiver decodes x.
double cf_delay(Point x, const PointSample& transmitters, const PointSample& receivers,
                const PathLossModel& model, const LinkParams& link);

// m / log2(1 + eta(r)); strictly increasing in r.
double delay_envelope(double r, const BetaRegulationParams& bp, const PathLossModel& model,
                      const LinkParams& link);

// Span T = ceil(m / log2(1 + eta0)).
long span(const LinkParams& link, double eta0);

// eta0 = 2^{m/T} - 1, the threshold whose span fits in T channel uses.
double dual_threshold(double m, long T);

struct DecodeEvent {
    std::size_t index = 0;       // index into sample.points
    double distance = 0.0;
    double srinr = 0.0;
    double virtual_delay = 0.0;  // own-link delay m / log2(1 + SrINR)
    double decode_time = 0.0;    // running max along the cancellation chain
    bool decodable = true;       // SrINR >= eta0
};

// Event-level SIC oracle: process transmitters in cancellation order
// (descending received power, i.e. ascending distance for a non-increasing
// path loss, ties by index); each decode time is the max of the own virtual
// delay and the predecessor's decode time. Returned in decode order.
std::vector<DecodeEvent> sic_decode_simulation(const PointSample& sample,
                                               const PathLossModel& model,
                                               const LinkParams& link);

// Every per-transmitter delay quantity of a realization in one O(n log n)
// pass; records sorted by distance. cf_delay is left NaN.
std::vector<DelayRecord> compute_delay_records(const PointSample& sample,
                                               const PathLossModel& model,
                                               const BetaRegulationParams& bp,
                                               const LinkParams& link);

} // namespace sicsnc
