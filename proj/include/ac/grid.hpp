#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

namespace ac {

// Cell-centered square grid on [0,L]^2: m cells per axis, centers at
// ((i-1/2)h, (j-1/2)h) with h = L/m.
struct Grid {
    int m;
    double side_length;

    Grid(int m_, double side_length_);
    double spacing() const { return side_length / m; }
    std::size_t cells() const { return static_cast<std::size_t>(m) * m; }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.m == b.m && a.side_length == b.side_length;
    }
};

class Field {
public:
    explicit Field(Grid grid, double fill = 0.0);

    const Grid& grid() const { return grid_; }
    int m() const { return grid_.m; }
    double h() const { return grid_.spacing(); }
    std::size_t size() const { return values_.size(); }

    double& operator()(int i, int j) { return values_[static_cast<std::size_t>(j) * grid_.m + i]; }
    double operator()(int i, int j) const { return values_[static_cast<std::size_t>(j) * grid_.m + i]; }
    double& operator[](std::size_t k) { return values_[k]; }
    double operator[](std::size_t k) const { return values_[k]; }
    double* data() { return values_.data(); }
    const double* data() const { return values_.data(); }

private:
    Grid grid_;
    std::vector<double> values_;
};

// Pointwise restriction of f(x,y) onto the cell centers.
template <std::invocable<double, double> F>
Field sample(const Grid& grid, F&& f) {
    Field out(grid);
    const double h = grid.spacing();
    for (int j = 0; j < grid.m; ++j) {
        const double y = (j + 0.5) * h;
        for (int i = 0; i < grid.m; ++i) out(i, j) = f((i + 0.5) * h, y);
    }
    return out;
}

// 5-point Laplacian with homogeneous Neumann faces (missing neighbors dropped).
Field laplacian(const Field& u);

// <u,v> = h^2 sum u_ij v_ij
double inner(const Field& u, const Field& v);

// ||grad_h u||^2 over interior faces
double grad_norm_sq(const Field& u);

// max_ij |u_ij|
double sup_norm(const Field& u);

// ||u||_h^2 = <u,u>
double l2_norm_sq(const Field& u);

void require_same_grid(const Field& u, const Field& v);

// Snapshot CSV: header "# m=<m> L=<L> t=<time>", then m rows (fixed y index)
// of m comma-separated values at 17 significant digits.
void write_snapshot(const std::string& path, const Field& u, double t);
Field read_snapshot(const std::string& path, double* t_out = nullptr);

}  // namespace ac
