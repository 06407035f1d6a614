#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "wamrec/errors.hpp"

namespace wamrec {

/// Sparse ray/voxel intersection-length matrix for one z slice.
///
/// Row y holds the lengths h(y|x) of ray y inside each voxel x it crosses.
/// Stored entries are strictly positive; rays that miss the grid keep an
/// empty row so ray indexing stays dense. A column-compressed mirror is
/// built at construction so both projection directions are pure gathers.
class SystemMatrix {
  public:
    SystemMatrix() = default;

    SystemMatrix(std::uint64_t rows, std::uint64_t cols,
                 std::vector<std::uint64_t> row_ptr,
                 std::vector<std::uint32_t> col_idx,
                 std::vector<double> values)
        : rows_(rows), cols_(cols), row_ptr_(std::move(row_ptr)),
          col_idx_(std::move(col_idx)), values_(std::move(values)) {
        if (row_ptr_.size() != rows_ + 1)
            throw ContractError("SystemMatrix: row_ptr must have rows+1 entries");
        if (col_idx_.size() != values_.size() || values_.size() != row_ptr_.back())
            throw ContractError("SystemMatrix: inconsistent CSR arrays");
        build_transpose();
    }

    std::uint64_t rows() const { return rows_; }
    std::uint64_t cols() const { return cols_; }
    std::uint64_t nnz() const { return values_.size(); }

    const std::vector<std::uint64_t>& row_ptr() const { return row_ptr_; }
    const std::vector<std::uint32_t>& col_idx() const { return col_idx_; }
    const std::vector<double>& values() const { return values_; }

    const std::vector<std::uint64_t>& col_ptr() const { return col_ptr_; }
    const std::vector<std::uint32_t>& row_idx() const { return row_idx_; }
    const std::vector<double>& col_values() const { return col_values_; }

    double row_sum(std::uint64_t y) const {
        double s = 0.0;
        for (std::uint64_t k = row_ptr_[y]; k < row_ptr_[y + 1]; ++k) s += values_[k];
        return s;
    }

    bool operator==(const SystemMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && row_ptr_ == o.row_ptr_ &&
               col_idx_ == o.col_idx_ && values_ == o.values_;
    }

  private:
    void build_transpose() {
        col_ptr_.assign(cols_ + 1, 0);
        for (std::uint32_t c : col_idx_) col_ptr_[c + 1]++;
        for (std::uint64_t c = 0; c < cols_; ++c) col_ptr_[c + 1] += col_ptr_[c];
        row_idx_.resize(values_.size());
        col_values_.resize(values_.size());
        std::vector<std::uint64_t> next(col_ptr_.begin(), col_ptr_.end() - 1);
        for (std::uint64_t y = 0; y < rows_; ++y) {
            for (std::uint64_t k = row_ptr_[y]; k < row_ptr_[y + 1]; ++k) {
                std::uint64_t dst = next[col_idx_[k]]++;
                row_idx_[dst] = static_cast<std::uint32_t>(y);
                col_values_[dst] = values_[k];
            }
        }
    }

    std::uint64_t rows_ = 0, cols_ = 0;
    std::vector<std::uint64_t> row_ptr_{0};
    std::vector<std::uint32_t> col_idx_;
    std::vector<double> values_;
    // transpose (rows sorted ascending within each column)
    std::vector<std::uint64_t> col_ptr_{0};
    std::vector<std::uint32_t> row_idx_;
    std::vector<double> col_values_;
};

namespace detail {

template <typename T>
void write_pod(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw IoError("unexpected end of file");
    return v;
}

template <typename T>
void write_array(std::ostream& os, const std::vector<T>& v) {
    os.write(reinterpret_cast<const char*>(v.data()),
             static_cast<std::streamsize>(v.size() * sizeof(T)));
}

template <typename T>
void read_array(std::istream& is, std::vector<T>& v, std::size_t n) {
    v.resize(n);
    is.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(n * sizeof(T)));
    if (!is) throw IoError("unexpected end of file");
}

} // namespace detail

inline constexpr char kMatrixCacheMagic[4] = {'W', 'A', 'M', 'H'};
inline constexpr std::uint32_t kMatrixCacheVersion = 1;

/// Writes the matrix to a little-endian binary cache file.
///
/// Layout: magic "WAMH", version u32, M u64, N u64, nnz u64, then the CSR
/// arrays (row pointers u64 x (M+1), column indices u32, values f64).
inline void save_system_matrix(const SystemMatrix& m, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open for writing: " + path);
    os.write(kMatrixCacheMagic, 4);
    detail::write_pod(os, kMatrixCacheVersion);
    detail::write_pod(os, m.rows());
    detail::write_pod(os, m.cols());
    detail::write_pod(os, m.nnz());
    detail::write_array(os, m.row_ptr());
    detail::write_array(os, m.col_idx());
    detail::write_array(os, m.values());
    if (!os) throw IoError("write failed: " + path);
}

inline SystemMatrix load_system_matrix(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open for reading: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMatrixCacheMagic, 4) != 0)
        throw IoError("not a system-matrix cache file: " + path);
    auto version = detail::read_pod<std::uint32_t>(is);
    if (version != kMatrixCacheVersion)
        throw IoError("unsupported cache version in " + path);
    auto rows = detail::read_pod<std::uint64_t>(is);
    auto cols = detail::read_pod<std::uint64_t>(is);
    auto nnz = detail::read_pod<std::uint64_t>(is);
    std::vector<std::uint64_t> row_ptr;
    std::vector<std::uint32_t> col_idx;
    std::vector<double> values;
    detail::read_array(is, row_ptr, rows + 1);
    detail::read_array(is, col_idx, nnz);
    detail::read_array(is, values, nnz);
    return SystemMatrix(rows, cols, std::move(row_ptr), std::move(col_idx), std::move(values));
}

} // namespace wamrec
