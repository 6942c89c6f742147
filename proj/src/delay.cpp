#include "sicsnc/delay.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sicsnc {

double link_rate(Point x, const PointSample& sample, const PathLossModel& model, double gamma0) {
    const double rx = norm(x);
    double rate = std::log2(1.0 + srinr(x, sample, model, gamma0));
    for (const auto& w : sample.points) {
        if (norm(w) <= rx)
            rate = std::min(rate, std::log2(1.0 + srinr(w, sample, model, gamma0)));
    }
    return rate;
}

double virtual_delay(Point x, const PointSample& sample, const PathLossModel& model,
                     const LinkParams& link) {
    if (link.m == 0.0) return 0.0;
    const double rate = link_rate(x, sample, model, link.gamma0());
    if (rate <= 0.0) return std::numeric_limits<double>::infinity();
    return link.m / rate;
}

double sic_delay(Point x, const PointSample& sample, const PathLossModel& model,
                 const LinkParams& link) {
    const double rx = norm(x);
    double d = virtual_delay(x, sample, model, link);
    for (const auto& w : sample.points) {
        if (norm(w) <= rx)
            d = std::max(d, virtual_delay(w, sample, model, link));
    }
    return d;
}

namespace {

// SIC delay of `x` seen from receiver `y`, brute force over the ball.
double sic_delay_at_receiver(Point x, Point y, const PointSample& transmitters,
                             const PathLossModel& model, const LinkParams& link) {
    const double rx = distance(x, y);
    double worst = 0.0;
    for (const auto& w : transmitters.points) {
        const double rw = distance(w, y);
        if (rw > rx) continue;
        // own SrINR of w at y
        double interference = 0.0;
        for (const auto& v : transmitters.points) {
            const double rv = distance(v, y);
            if (rv > rw) interference += model(rv);
        }
        const double s = model(rw) / (interference + link.gamma0());
        const double rate = std::log2(1.0 + s);
        worst = std::max(worst, rate > 0.0 ? link.m / rate
                                           : std::numeric_limits<double>::infinity());
    }
    return worst;
}

} // namespace

double cf_delay(Point x, const PointSample& transmitters, const PointSample& receivers,
                const PathLossModel& model, const LinkParams& link) {
    if (receivers.points.empty())
        throw std::invalid_argument("cf_delay: need at least one receiver");

    std::vector<std::pair<double, std::size_t>> by_dist;
    by_dist.reserve(receivers.points.size());
    for (std::size_t i = 0; i < receivers.points.size(); ++i)
        by_dist.emplace_back(distance(receivers.points[i], x), i);
    std::sort(by_dist.begin(), by_dist.end());

    double best = std::numeric_limits<double>::infinity();
    for (const auto& [dist_xy, idx] : by_dist) {
        // no farther receiver can beat `best`: its delay is at least
        // m / log2(1 + ell(dist)/gamma0)
        const double floor_rate = std::log2(1.0 + model(dist_xy) / link.gamma0());
        if (floor_rate > 0.0 && link.m / floor_rate >= best) break;

        const Point y = receivers.points[idx];
        double interference = 0.0;
        for (const auto& v : transmitters.points) {
            if (distance(v, y) > dist_xy) interference += model(distance(v, y));
        }
        const double s = model(dist_xy) / (interference + link.gamma0());
        if (s < link.eta0) continue;  // y cannot decode x, contributes +inf
        best = std::min(best, sic_delay_at_receiver(x, y, transmitters, model, link));
    }
    return best;
}

double delay_envelope(double r, const BetaRegulationParams& bp, const PathLossModel& model,
                      const LinkParams& link) {
    if (link.m == 0.0) return 0.0;
    const double eta = eta_envelope(r, bp, model, link.gamma0());
    if (!(eta > 0.0)) throw std::domain_error("delay_envelope: eta(r) must be > 0");
    return link.m / std::log2(1.0 + eta);
}

long span(const LinkParams& link, double eta0) {
    if (!(eta0 > 0.0)) throw std::invalid_argument("span: need eta0 > 0");
    if (!(link.m >= 1.0)) throw std::invalid_argument("span: need m >= 1");
    return static_cast<long>(std::ceil(link.m / std::log2(1.0 + eta0)));
}

double dual_threshold(double m, long T) {
    if (T < 1) throw std::invalid_argument("dual_threshold: need T >= 1");
    return std::exp2(m / static_cast<double>(T)) - 1.0;
}

std::vector<DecodeEvent> sic_decode_simulation(const PointSample& sample,
                                               const PathLossModel& model,
                                               const LinkParams& link) {
    const std::size_t n = sample.points.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i) dist[i] = norm(sample.points[i]);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });

    // suffix sums of ell over strictly farther points
    std::vector<double> ell(n);
    for (std::size_t i = 0; i < n; ++i) ell[i] = model(dist[order[i]]);
    std::vector<double> interference(n, 0.0);
    {
        double suffix = 0.0;
        std::size_t i = n;
        while (i > 0) {
            std::size_t j = i;
            while (j > 0 && dist[order[j - 1]] == dist[order[i - 1]]) --j;
            for (std::size_t k = j; k < i; ++k) interference[k] = suffix;
            for (std::size_t k = j; k < i; ++k) suffix += ell[k];
            i = j;
        }
    }

    std::vector<DecodeEvent> events;
    events.reserve(n);
    double chain = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        DecodeEvent e;
        e.index = order[k];
        e.distance = dist[order[k]];
        e.srinr = ell[k] / (interference[k] + link.gamma0());
        const double rate = std::log2(1.0 + e.srinr);
        e.virtual_delay = link.m == 0.0 ? 0.0
                        : (rate > 0.0 ? link.m / rate
                                      : std::numeric_limits<double>::infinity());
        chain = std::max(chain, e.virtual_delay);
        e.decode_time = chain;
        e.decodable = e.srinr >= link.eta0;
        events.push_back(e);
    }
    return events;
}

std::vector<DelayRecord> compute_delay_records(const PointSample& sample,
                                               const PathLossModel& model,
                                               const BetaRegulationParams& bp,
                                               const LinkParams& link) {
    const auto events = sic_decode_simulation(sample, model, link);
    std::vector<DelayRecord> records;
    records.reserve(events.size());
    double worst_rate = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < events.size();) {
        // the rate infimum and delay supremum extend over distance ties
        std::size_t end = k;
        while (end + 1 < events.size() && events[end + 1].distance == events[k].distance) ++end;
        for (std::size_t j = k; j <= end; ++j)
            worst_rate = std::min(worst_rate, std::log2(1.0 + events[j].srinr));
        for (std::size_t j = k; j <= end; ++j) {
            const auto& e = events[j];
            DelayRecord rec;
            rec.transmitter = sample.points[e.index];
            rec.distance = e.distance;
            rec.srinr = e.srinr;
            rec.rate = worst_rate;
            rec.virtual_delay = link.m == 0.0 ? 0.0
                              : (worst_rate > 0.0 ? link.m / worst_rate
                                                  : std::numeric_limits<double>::infinity());
            rec.sic_delay = rec.virtual_delay;
            rec.analytic_bound = delay_envelope(e.distance, bp, model, link);
            records.push_back(rec);
        }
        k = end + 1;
    }
    return records;
}

} // namespace sicsnc
