#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wamrec/errors.hpp"

namespace wamrec {

/// Voxel grid of linear attenuation values (inverse length units).
///
/// Storage is row-major per slice: index = (z * ny + iy) * nx + ix, where
/// ix runs along x (columns) and iy along y (rows). z slices are treated as
/// independent 2D problems throughout the library.
class AttenuationImage {
  public:
    AttenuationImage() = default;
    AttenuationImage(int nx, int ny, int nz, double fill = 0.0)
        : nx_(nx), ny_(ny), nz_(nz),
          data_(static_cast<std::size_t>(nx) * ny * nz, fill) {
        if (nx <= 0 || ny <= 0 || nz <= 0)
            throw ContractError("AttenuationImage: dimensions must be positive");
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }
    std::size_t size() const { return data_.size(); }
    std::size_t slice_size() const { return static_cast<std::size_t>(nx_) * ny_; }

    double& at(int ix, int iy, int iz = 0) {
        return data_[(static_cast<std::size_t>(iz) * ny_ + iy) * nx_ + ix];
    }
    double at(int ix, int iy, int iz = 0) const {
        return data_[(static_cast<std::size_t>(iz) * ny_ + iy) * nx_ + ix];
    }

    std::span<double> slice(int iz) {
        return std::span<double>(data_.data() + static_cast<std::size_t>(iz) * slice_size(),
                                 slice_size());
    }
    std::span<const double> slice(int iz) const {
        return std::span<const double>(data_.data() + static_cast<std::size_t>(iz) * slice_size(),
                                       slice_size());
    }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

  private:
    int nx_ = 0, ny_ = 0, nz_ = 0;
    std::vector<double> data_;
};

} // namespace wamrec
