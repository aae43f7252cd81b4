#include "martkit/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace martkit {

Grid::Grid(int dim_, int n_, double hw) : dim(dim_), n(n_), half_width(hw) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("Grid: dim must be 2 or 3");
    if (n < 3) throw std::invalid_argument("Grid: need n >= 3 samples per axis");
    if (!(hw > 0.0)) throw std::invalid_argument("Grid: half_width must be positive");
}

std::size_t Grid::node_count() const {
    std::size_t m = std::size_t(n);
    return dim == 3 ? m * m * m : m * m;
}

GridField::GridField(const Grid& grid, int channels, double fill)
    : grid_(grid), channels_(channels) {
    if (channels < 1) throw std::invalid_argument("GridField: need >= 1 channel");
    data_.assign(grid_.node_count() * std::size_t(channels_), fill);
}

double GridField::sample(const Vec3& p, int c) const {
    const double hw = grid_.half_width;
    const double h = grid_.spacing();
    const double slack = 1e-9 * hw;
    auto locate = [&](double x) {
        if (x < -hw - slack || x > hw + slack)
            throw std::domain_error("GridField::sample: point outside cube");
        double t = (std::clamp(x, -hw, hw) + hw) / h;
        int k = std::min(int(t), grid_.n - 2);
        return std::pair<int, double>{k, t - double(k)};
    };
    auto [ix, fx] = locate(p.x);
    auto [iy, fy] = locate(p.y);
    if (grid_.dim == 2) {
        double c00 = at2(ix, iy, c), c10 = at2(ix + 1, iy, c);
        double c01 = at2(ix, iy + 1, c), c11 = at2(ix + 1, iy + 1, c);
        return (1 - fx) * (1 - fy) * c00 + fx * (1 - fy) * c10 + (1 - fx) * fy * c01 +
               fx * fy * c11;
    }
    auto [iz, fz] = locate(p.z);
    double acc = 0.0;
    for (int dz = 0; dz < 2; ++dz)
        for (int dy = 0; dy < 2; ++dy)
            for (int dx = 0; dx < 2; ++dx) {
                double w = (dx ? fx : 1 - fx) * (dy ? fy : 1 - fy) * (dz ? fz : 1 - fz);
                acc += w * at3(ix + dx, iy + dy, iz + dz, c);
            }
    return acc;
}

bool GridField::all_finite() const {
    return first_non_finite() == std::numeric_limits<std::size_t>::max();
}

std::size_t GridField::first_non_finite() const {
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!std::isfinite(data_[i])) return i;
    return std::numeric_limits<std::size_t>::max();
}

std::pair<double, double> GridField::channel_min_max(int c) const {
    double mn = std::numeric_limits<double>::infinity();
    double mx = -mn;
    for (std::size_t i = std::size_t(c); i < data_.size(); i += std::size_t(channels_)) {
        mn = std::min(mn, data_[i]);
        mx = std::max(mx, data_[i]);
    }
    return {mn, mx};
}

}  // namespace martkit
