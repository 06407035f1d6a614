#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "wamrec/geometry.hpp"
#include "wamrec/system_matrix.hpp"

namespace wamrec {

namespace detail {

struct Ray {
    double ox, oy; // origin (length units)
    double dx, dy; // unit direction
    double tmin, tmax; // usable parameter interval along the ray
};

inline Ray make_ray(const ScanGeometry& g, int view, int det) {
    const double theta = g.view_angles[view];
    const double c = std::cos(theta), s = std::sin(theta);
    const double u = (det - 0.5 * (g.detectors - 1)) * g.detector_spacing;
    Ray r{};
    if (g.beam == BeamType::Parallel) {
        // detector axis is (-s, c); rays travel along (c, s)
        r.ox = -s * u;
        r.oy = c * u;
        r.dx = c;
        r.dy = s;
        r.tmin = -std::numeric_limits<double>::max();
        r.tmax = std::numeric_limits<double>::max();
    } else {
        const double sx = g.source_to_center * c;
        const double sy = g.source_to_center * s;
        const double px = sx - g.source_to_detector * c - s * u;
        const double py = sy - g.source_to_detector * s + c * u;
        const double len = std::hypot(px - sx, py - sy);
        r.ox = sx;
        r.oy = sy;
        r.dx = (px - sx) / len;
        r.dy = (py - sy) / len;
        r.tmin = 0.0;
        r.tmax = len;
    }
    return r;
}

/// Clips [tmin, tmax] against one slab [lo, hi]; returns false on a miss.
inline bool clip_axis(double o, double d, double lo, double hi, double& tmin, double& tmax) {
    if (d == 0.0) return o >= lo && o <= hi;
    double t0 = (lo - o) / d;
    double t1 = (hi - o) / d;
    if (t0 > t1) std::swap(t0, t1);
    if (t0 > tmin) tmin = t0;
    if (t1 < tmax) tmax = t1;
    return tmin < tmax;
}

/// Walks the ray through the voxel grid, appending exact intersection
/// lengths for every voxel crossed. Appends nothing if the ray misses.
template <typename Emit>
void trace_ray(const ScanGeometry& g, const Ray& ray, Emit&& emit) {
    const double h = g.voxel_size;
    const double xmin = -0.5 * g.image_width();
    const double ymin = -0.5 * g.image_height();

    double tmin = ray.tmin, tmax = ray.tmax;
    if (!clip_axis(ray.ox, ray.dx, xmin, xmin + g.image_width(), tmin, tmax)) return;
    if (!clip_axis(ray.oy, ray.dy, ymin, ymin + g.image_height(), tmin, tmax)) return;
    if (!(tmax > tmin)) return;

    auto cell = [](double pos, double origin, double edge, int n) {
        int i = static_cast<int>(std::floor((pos - origin) / edge));
        return std::clamp(i, 0, n - 1);
    };
    const double ex = ray.ox + tmin * ray.dx;
    const double ey = ray.oy + tmin * ray.dy;
    int ix = cell(ex, xmin, h, g.nx);
    int iy = cell(ey, ymin, h, g.ny);

    const int step_x = ray.dx > 0.0 ? 1 : -1;
    const int step_y = ray.dy > 0.0 ? 1 : -1;
    const double big = std::numeric_limits<double>::max();
    const double dt_x = ray.dx != 0.0 ? h / std::abs(ray.dx) : big;
    const double dt_y = ray.dy != 0.0 ? h / std::abs(ray.dy) : big;

    // parameter value of the next x / y gridline crossing
    double next_x = big, next_y = big;
    if (ray.dx != 0.0) {
        double edge = xmin + (ray.dx > 0.0 ? ix + 1 : ix) * h;
        next_x = (edge - ray.ox) / ray.dx;
    }
    if (ray.dy != 0.0) {
        double edge = ymin + (ray.dy > 0.0 ? iy + 1 : iy) * h;
        next_y = (edge - ray.oy) / ray.dy;
    }

    double t = tmin;
    while (t < tmax) {
        double t_stop = std::min({next_x, next_y, tmax});
        double len = t_stop - t;
        if (len > 0.0) emit(ix, iy, len);
        if (t_stop >= tmax) break;
        if (next_x <= t_stop) {
            ix += step_x;
            next_x += dt_x;
            if (ix < 0 || ix >= g.nx) break;
        }
        if (next_y <= t_stop) {
            iy += step_y;
            next_y += dt_y;
            if (iy < 0 || iy >= g.ny) break;
        }
        t = t_stop;
    }
}

} // namespace detail

/// Builds the per-slice system matrix with exact ray/voxel intersection
/// lengths. Rows are ordered view-major (row = view * detectors + det) and
/// the construction is bit-reproducible for a fixed geometry.
inline SystemMatrix build_system_matrix(const ScanGeometry& g) {
    g.validate();
    const std::uint64_t rows = g.rays_per_slice();
    const std::uint64_t cols = g.voxels_per_slice();

    std::vector<std::uint64_t> row_ptr;
    row_ptr.reserve(rows + 1);
    row_ptr.push_back(0);
    std::vector<std::uint32_t> col_idx;
    std::vector<double> values;

    for (int v = 0; v < g.views(); ++v) {
        for (int k = 0; k < g.detectors; ++k) {
            detail::Ray ray = detail::make_ray(g, v, k);
            detail::trace_ray(g, ray, [&](int ix, int iy, double len) {
                col_idx.push_back(static_cast<std::uint32_t>(iy) * g.nx + ix);
                values.push_back(len);
            });
            row_ptr.push_back(values.size());
        }
    }
    return SystemMatrix(rows, cols, std::move(row_ptr), std::move(col_idx), std::move(values));
}

} // namespace wamrec
