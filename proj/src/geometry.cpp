#include "sicsnc/geometry.hpp"

#include "sicsnc/rng.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sicsnc {

PointSample sample_poisson(double intensity, const Window& window, std::uint64_t seed) {
    if (!(intensity > 0.0))
        throw std::invalid_argument("sample_poisson: intensity must be > 0");
    Rng rng(seed);
    const double side = 2.0 * window.half_width;
    const long n = rng.poisson(intensity * side * side);
    PointSample s;
    s.points.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        const double x = window.center.x + rng.uniform(-window.half_width, window.half_width);
        const double y = window.center.y + rng.uniform(-window.half_width, window.half_width);
        s.points.push_back({x, y});
    }
    s.window = window;
    s.generator = {GeneratorKind::Poisson, intensity, 0.0, 0.0, 0.0};
    s.seed = seed;
    return s;
}

PointSample sample_matern2(double parent_intensity, double hardcore_distance,
                           const Window& window, std::uint64_t seed) {
    if (!(hardcore_distance > 0.0))
        throw std::invalid_argument("sample_matern2: hardcore distance must be > 0");
    if (!(parent_intensity > 0.0))
        throw std::invalid_argument("sample_matern2: parent intensity must be > 0");
    Rng rng(seed);
    const double hw = window.half_width + hardcore_distance;
    const double side = 2.0 * hw;
    const long n = rng.poisson(parent_intensity * side * side);

    std::vector<Point> parents(static_cast<std::size_t>(n));
    for (auto& p : parents) {
        p.x = window.center.x + rng.uniform(-hw, hw);
        p.y = window.center.y + rng.uniform(-hw, hw);
    }
    std::vector<double> marks(parents.size());
    for (auto& m : marks) m = rng.uniform();

    PointGrid grid(parents, hardcore_distance);
    const double h2 = hardcore_distance * hardcore_distance;

    PointSample s;
    for (std::size_t i = 0; i < parents.size(); ++i) {
        bool keep = true;
        grid.for_each_within(parents[i], hardcore_distance, [&](std::size_t j) {
            if (!keep || j == i) return;
            const double dx = parents[j].x - parents[i].x;
            const double dy = parents[j].y - parents[i].y;
            if (dx * dx + dy * dy < h2
                && (marks[j] < marks[i] || (marks[j] == marks[i] && j < i)))
                keep = false;
        });
        if (keep && window.contains(parents[i])) s.points.push_back(parents[i]);
    }
    s.window = window;
    s.generator = {GeneratorKind::MaternII, parent_intensity, hardcore_distance, 0.0, 0.0};
    s.seed = seed;
    return s;
}

double matern2_intensity(double parent_intensity, double hardcore_distance) {
    if (!(parent_intensity > 0.0) || !(hardcore_distance > 0.0))
        throw std::invalid_argument("matern2_intensity: need lambda > 0 and H > 0");
    const double a = std::numbers::pi * hardcore_distance * hardcore_distance;
    return -std::expm1(-parent_intensity * a) / a;
}

PointSample sample_perturbed_lattice(double spacing, double displacement_radius,
                                     const Window& window, std::uint64_t seed) {
    if (!(spacing > 0.0))
        throw std::invalid_argument("sample_perturbed_lattice: spacing must be > 0");
    if (displacement_radius < 0.0)
        throw std::invalid_argument("sample_perturbed_lattice: displacement must be >= 0");
    Rng rng(seed);
    const double reach = window.half_width + displacement_radius;
    const long n = static_cast<long>(std::floor(reach / spacing));
    PointSample s;
    for (long i = -n; i <= n; ++i) {
        for (long j = -n; j <= n; ++j) {
            Point p{window.center.x + spacing * static_cast<double>(i),
                    window.center.y + spacing * static_cast<double>(j)};
            if (displacement_radius > 0.0) {
                // polar draw, uniform on the open disk
                const double r = displacement_radius * std::sqrt(rng.uniform());
                const double phi = 2.0 * std::numbers::pi * rng.uniform();
                p.x += r * std::cos(phi);
                p.y += r * std::sin(phi);
            }
            if (window.contains(p)) s.points.push_back(p);
        }
    }
    s.window = window;
    s.generator = {GeneratorKind::PerturbedLattice, 0.0, 0.0, spacing, displacement_radius};
    s.seed = seed;
    return s;
}

PointSample palm_center(const PointSample& sample, Point center) {
    if (!sample.window.contains(center))
        throw std::invalid_argument("palm_center: center outside window");
    PointSample out = sample;
    for (auto& p : out.points) {
        p.x -= center.x;
        p.y -= center.y;
    }
    out.window.center.x -= center.x;
    out.window.center.y -= center.y;
    return out;
}

PointGrid::PointGrid(const std::vector<Point>& points, double cell_size)
    : points_(&points), cell_(cell_size > 0.0 ? cell_size : 1.0) {
    cells_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        cells_[key(cell_coord(points[i].x), cell_coord(points[i].y))].push_back(i);
}

long PointGrid::count_within(Point c, double radius) const {
    long n = 0;
    for_each_within(c, radius, [&](std::size_t) { ++n; });
    return n;
}

double PointGrid::nearest_distance(Point c) const {
    if (points_->empty()) return std::numeric_limits<double>::infinity();
    double best2 = std::numeric_limits<double>::infinity();
    // expand ring by ring until a hit is certain
    for (double radius = cell_;; radius *= 2.0) {
        const double r2 = radius * radius;
        for_each_within(c, radius, [&](std::size_t i) {
            const double dx = (*points_)[i].x - c.x;
            const double dy = (*points_)[i].y - c.y;
            const double d2 = dx * dx + dy * dy;
            if (d2 < best2) best2 = d2;
        });
        if (best2 <= r2) return std::sqrt(best2);
        if (radius > 8.0 * cell_ * (1.0 + std::sqrt(static_cast<double>(points_->size())))) {
            // degenerate spread; fall back to a linear scan
            for (const auto& p : *points_) {
                const double dx = p.x - c.x;
                const double dy = p.y - c.y;
                best2 = std::min(best2, dx * dx + dy * dy);
            }
            return std::sqrt(best2);
        }
    }
}

} // namespace sicsnc
