#ifndef MARTKIT_GRID_HPP
#define MARTKIT_GRID_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "martkit/types.hpp"

namespace martkit {

/// Uniform node-centered lattice over [-half_width, half_width]^dim with
/// boundary nodes included, n samples per axis.
struct Grid {
    int dim = 3;
    int n = 3;
    double half_width = 1.0;

    Grid() = default;
    Grid(int dim_, int n_, double hw);

    double spacing() const { return 2.0 * half_width / double(n - 1); }
    double coord(int k) const { return -half_width + spacing() * double(k); }
    std::size_t node_count() const;
    Vec3 node3(int ix, int iy, int iz) const { return {coord(ix), coord(iy), coord(iz)}; }
};

/// Dense multi-channel field on a Grid; data row major with x fastest.
class GridField {
  public:
    GridField() = default;
    GridField(const Grid& grid, int channels, double fill = 0.0);

    const Grid& grid() const { return grid_; }
    int channels() const { return channels_; }
    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    std::size_t index3(int ix, int iy, int iz, int c) const {
        return ((std::size_t(iz) * std::size_t(grid_.n) + std::size_t(iy)) *
                    std::size_t(grid_.n) +
                std::size_t(ix)) *
                   std::size_t(channels_) +
               std::size_t(c);
    }
    std::size_t index2(int ix, int iy, int c) const {
        return (std::size_t(iy) * std::size_t(grid_.n) + std::size_t(ix)) *
                   std::size_t(channels_) +
               std::size_t(c);
    }
    double at3(int ix, int iy, int iz, int c) const { return data_[index3(ix, iy, iz, c)]; }
    double& at3(int ix, int iy, int iz, int c) { return data_[index3(ix, iy, iz, c)]; }
    double at2(int ix, int iy, int c) const { return data_[index2(ix, iy, c)]; }
    double& at2(int ix, int iy, int c) { return data_[index2(ix, iy, c)]; }

    /// Multilinear interpolation; the point must lie inside the cube.
    double sample(const Vec3& p, int c) const;

    bool all_finite() const;
    /// Index of the first non-finite entry, or npos.
    std::size_t first_non_finite() const;
    std::pair<double, double> channel_min_max(int c) const;

  private:
    Grid grid_;
    int channels_ = 1;
    std::vector<double> data_;
};

}  // namespace martkit

#endif
