#include "distance_transform.hpp"

#include <limits>

namespace eigenbound::geometry::detail {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void squared_edt_1d(std::span<const double> f, std::span<double> d)
{
    const int n = static_cast<int>(f.size());
    std::vector<int> v(n);
    std::vector<double> z(n + 1);

    int k = -1;
    for (int q = 0; q < n; ++q) {
        if (f[q] == kInf) continue;
        if (k < 0) {
            k = 0;
            v[0] = q;
            z[0] = -kInf;
            z[1] = kInf;
            continue;
        }
        auto intersect = [&](int p) {
            return ((f[q] + double(q) * q) - (f[p] + double(p) * p)) / (2.0 * (q - p));
        };
        double s = intersect(v[k]);
        while (s <= z[k]) {
            --k;
            s = intersect(v[k]);
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = kInf;
    }

    if (k < 0) {
        for (int q = 0; q < n; ++q) d[q] = kInf;
        return;
    }
    int j = 0;
    for (int q = 0; q < n; ++q) {
        while (z[j + 1] < q) ++j;
        const double dq = double(q - v[j]);
        d[q] = dq * dq + f[v[j]];
    }
}

std::vector<double> squared_edt(std::span<const std::uint8_t> sites, int nx, int ny)
{
    std::vector<double> grid(static_cast<std::size_t>(nx) * ny);
    for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = sites[i] ? 0.0 : kInf;

    // columns (along y) first, then rows
    std::vector<double> line(ny), out(ny);
    for (int ix = 0; ix < nx; ++ix) {
        for (int iy = 0; iy < ny; ++iy) line[iy] = grid[static_cast<std::size_t>(iy) * nx + ix];
        squared_edt_1d(line, out);
        for (int iy = 0; iy < ny; ++iy) grid[static_cast<std::size_t>(iy) * nx + ix] = out[iy];
    }
    line.resize(nx);
    out.resize(nx);
    for (int iy = 0; iy < ny; ++iy) {
        auto row = std::span<double>(grid).subspan(static_cast<std::size_t>(iy) * nx, nx);
        std::copy(row.begin(), row.end(), line.begin());
        squared_edt_1d(line, out);
        std::copy(out.begin(), out.end(), row.begin());
    }
    return grid;
}

} // namespace eigenbound::geometry::detail
