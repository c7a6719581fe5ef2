#include "ac/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ac/kernels.hpp"

namespace ac {

Grid::Grid(int m_, double side_length_) : m(m_), side_length(side_length_) {
    if (m < 2) throw std::invalid_argument("Grid: need m >= 2");
    if (!(side_length > 0.0)) throw std::invalid_argument("Grid: need L > 0");
}

Field::Field(Grid grid, double fill) : grid_(grid), values_(grid.cells(), fill) {}

void require_same_grid(const Field& u, const Field& v) {
    if (!(u.grid() == v.grid())) throw std::invalid_argument("fields live on different grids");
}

Field laplacian(const Field& u) {
    Field out(u.grid());
    const double h = u.h();
    kernels::active().laplacian(u.m(), 1.0 / (h * h), u.data(), out.data());
    return out;
}

double inner(const Field& u, const Field& v) {
    require_same_grid(u, v);
    const double h = u.h();
    return h * h * kernels::active().dot(u.size(), u.data(), v.data());
}

double grad_norm_sq(const Field& u) {
    return kernels::active().grad_norm_sq(u.m(), u.data());
}

double sup_norm(const Field& u) {
    return kernels::active().inf_norm(u.size(), u.data());
}

double l2_norm_sq(const Field& u) { return inner(u, u); }

void write_snapshot(const std::string& path, const Field& u, double t) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    std::fprintf(f, "# m=%d L=%.17g t=%.17g\n", u.m(), u.grid().side_length, t);
    for (int j = 0; j < u.m(); ++j) {
        for (int i = 0; i < u.m(); ++i) {
            std::fprintf(f, i ? ",%.17g" : "%.17g", u(i, j));
        }
        std::fputc('\n', f);
    }
    std::fclose(f);
}

Field read_snapshot(const std::string& path, double* t_out) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string header;
    std::getline(in, header);
    int m = 0;
    double L = 0.0, t = 0.0;
    if (std::sscanf(header.c_str(), "# m=%d L=%lf t=%lf", &m, &L, &t) != 3)
        throw std::runtime_error("bad snapshot header in " + path);
    Field u(Grid(m, L));
    std::string line;
    for (int j = 0; j < m; ++j) {
        if (!std::getline(in, line)) throw std::runtime_error("truncated snapshot: " + path);
        std::stringstream ss(line);
        std::string cell;
        for (int i = 0; i < m; ++i) {
            if (!std::getline(ss, cell, ',')) throw std::runtime_error("short row in " + path);
            u(i, j) = std::strtod(cell.c_str(), nullptr);
        }
    }
    if (t_out) *t_out = t;
    return u;
}

}  // namespace ac
