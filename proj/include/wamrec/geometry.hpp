#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "wamrec/errors.hpp"

namespace wamrec {

enum class BeamType { Parallel, Fan };

/// Scanner and image-grid description for one acquisition.
///
/// The image is centred on the origin; voxels are square with edge
/// `voxel_size` (length units). Rays are traced in the xy plane and reused
/// for every z slice. Fan geometry uses a flat detector at distance
/// `source_to_detector` from the source, sampled every `detector_spacing`.
struct ScanGeometry {
    int nx = 0;
    int ny = 0;
    int nz = 1;
    double voxel_size = 1.0;

    int detectors = 0;
    double detector_spacing = 1.0;
    std::vector<double> view_angles; // radians

    BeamType beam = BeamType::Parallel;
    double source_to_center = 0.0;   // fan only
    double source_to_detector = 0.0; // fan only

    int views() const { return static_cast<int>(view_angles.size()); }
    /// Rays per z slice.
    std::size_t rays_per_slice() const {
        return static_cast<std::size_t>(views()) * detectors;
    }
    /// Rays over all slices.
    std::size_t total_rays() const { return rays_per_slice() * nz; }
    std::size_t voxels_per_slice() const { return static_cast<std::size_t>(nx) * ny; }

    double image_width() const { return nx * voxel_size; }
    double image_height() const { return ny * voxel_size; }
    /// In-plane image diagonal, the longest possible chord through the grid.
    double image_diagonal() const {
        return std::hypot(image_width(), image_height());
    }

    void validate() const {
        if (nx < 4 || ny < 4) throw ConfigError("geometry: nx and ny must be >= 4");
        if (nz < 1) throw ConfigError("geometry: nz must be >= 1");
        if (!(voxel_size > 0.0)) throw ConfigError("geometry: voxel_size must be positive");
        if (detectors < 1) throw ConfigError("geometry: at least one detector required");
        if (view_angles.empty()) throw ConfigError("geometry: at least one view required");
        if (!(detector_spacing > 0.0))
            throw ConfigError("geometry: detector_spacing must be positive");
        for (double a : view_angles)
            if (!std::isfinite(a)) throw ConfigError("geometry: non-finite view angle");
        if (beam == BeamType::Fan) {
            if (!(source_to_center > 0.0))
                throw ConfigError("geometry: source_to_center must be positive");
            if (!(source_to_detector > source_to_center))
                throw ConfigError("geometry: source_to_detector must exceed source_to_center");
        }
    }
};

inline std::vector<double> uniform_angles(int views, double arc) {
    std::vector<double> a(static_cast<std::size_t>(views));
    for (int v = 0; v < views; ++v) a[v] = arc * v / views;
    return a;
}

/// Parallel-beam geometry with `views` angles spread over [0, pi).
inline ScanGeometry make_parallel_geometry(int nx, int ny, int nz, double voxel_size,
                                           int views, int detectors,
                                           double detector_spacing) {
    ScanGeometry g;
    g.nx = nx;
    g.ny = ny;
    g.nz = nz;
    g.voxel_size = voxel_size;
    g.detectors = detectors;
    g.detector_spacing = detector_spacing;
    g.beam = BeamType::Parallel;
    if (views < 1) throw ConfigError("geometry: at least one view required");
    g.view_angles = uniform_angles(views, std::numbers::pi);
    g.validate();
    return g;
}

/// Fan-beam geometry (flat detector) with `views` angles over [0, 2*pi).
inline ScanGeometry make_fan_geometry(int nx, int ny, int nz, double voxel_size,
                                      int views, int detectors, double detector_spacing,
                                      double source_to_center, double source_to_detector) {
    ScanGeometry g;
    g.nx = nx;
    g.ny = ny;
    g.nz = nz;
    g.voxel_size = voxel_size;
    g.detectors = detectors;
    g.detector_spacing = detector_spacing;
    g.beam = BeamType::Fan;
    g.source_to_center = source_to_center;
    g.source_to_detector = source_to_detector;
    if (views < 1) throw ConfigError("geometry: at least one view required");
    g.view_angles = uniform_angles(views, 2.0 * std::numbers::pi);
    g.validate();
    return g;
}

} // namespace wamrec
