#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace sicsnc {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(Point a, Point b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

inline double norm(Point p) { return std::sqrt(p.x * p.x + p.y * p.y); }

// Square observation window. `center` is the origin unless the sample has been
// Palm-shifted. Statistics are restricted to the window shrunk by
// `analysis_margin` so every analysed point keeps neighbours on all sides.
struct Window {
    double half_width = 100.0;
    double analysis_margin = 50.0;
    Point center{};

    bool contains(Point p) const {
        return std::fabs(p.x - center.x) <= half_width && std::fabs(p.y - center.y) <= half_width;
    }
    bool analysis_contains(Point p) const {
        const double h = half_width - analysis_margin;
        return std::fabs(p.x - center.x) <= h && std::fabs(p.y - center.y) <= h;
    }
    double analysis_half_width() const { return half_width - analysis_margin; }
};

enum class GeneratorKind { Poisson, MaternII, PerturbedLattice, Manual };

struct GeneratorInfo {
    GeneratorKind kind = GeneratorKind::Manual;
    double intensity = 0.0;          // Poisson / Matern parent intensity
    double hardcore = 0.0;           // Matern II thinning radius
    double spacing = 0.0;            // lattice spacing
    double displacement = 0.0;       // lattice displacement radius
};

struct PointSample {
    std::vector<Point> points;
    Window window;
    GeneratorInfo generator;
    std::uint64_t seed = 0;
};

// Homogeneous Poisson process on the window: Poisson count, i.i.d. uniform
// positions, drawn as (x, y) per point in order.
PointSample sample_poisson(double intensity, const Window& window, std::uint64_t seed);

// Matern type-II thinning of a parent Poisson process. The parent is sampled
// on the window dilated by the hardcore distance so boundary points see their
// competitors; marks are i.i.d. uniform, ties broken by point index.
PointSample sample_matern2(double parent_intensity, double hardcore_distance,
                           const Window& window, std::uint64_t seed);

// (1 - exp(-lambda pi H^2)) / (pi H^2), the retained intensity of Matern II.
double matern2_intensity(double parent_intensity, double hardcore_distance);

// Square lattice of the given spacing, each site displaced independently and
// uniformly on the open disk of radius `displacement_radius`. With spacing
// tau/2 and radius tau/4 the result is tau-void regulated.
PointSample sample_perturbed_lattice(double spacing, double displacement_radius,
                                     const Window& window, std::uint64_t seed);

// Translate the sample so `center` becomes the origin (Palm centering).
PointSample palm_center(const PointSample& sample, Point center);

// Uniform hash grid for fixed-radius neighbour queries over an immutable
// point set.
class PointGrid {
public:
    PointGrid(const std::vector<Point>& points, double cell_size);

    // invoke fn(index) for every point with distance(c, p) < radius
    template <typename F>
    void for_each_within(Point c, double radius, F&& fn) const {
        const double r2 = radius * radius;
        const long cx0 = cell_coord(c.x - radius), cx1 = cell_coord(c.x + radius);
        const long cy0 = cell_coord(c.y - radius), cy1 = cell_coord(c.y + radius);
        for (long cx = cx0; cx <= cx1; ++cx) {
            for (long cy = cy0; cy <= cy1; ++cy) {
                const auto it = cells_.find(key(cx, cy));
                if (it == cells_.end()) continue;
                for (const std::size_t i : it->second) {
                    const double dx = (*points_)[i].x - c.x;
                    const double dy = (*points_)[i].y - c.y;
                    if (dx * dx + dy * dy < r2) fn(i);
                }
            }
        }
    }

    long count_within(Point c, double radius) const;
    // distance to the nearest point, +inf when the set is empty
    double nearest_distance(Point c) const;

private:
    long cell_coord(double v) const { return static_cast<long>(std::floor(v / cell_)); }
    static std::uint64_t key(long cx, long cy) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(cx)) << 32)
             | static_cast<std::uint64_t>(static_cast<std::uint32_t>(cy));
    }
    const std::vector<Point>* points_;
    double cell_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

} // namespace sicsnc
