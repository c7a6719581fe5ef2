#pragma once

#include <string>
#include <vector>

#include "ac/grid.hpp"

namespace ac {

// One row per accepted step plus the initial row.
struct RunSeries {
    struct Row {
        double t;
        double sup_norm;
        double energy;
        double modified_energy;
        double tau;  // step that produced this row (0 for the initial row)
    };
    std::vector<Row> rows;

    void write_csv(const std::string& path) const;
};

struct ConvergenceTable {
    struct Row {
        int n_steps;
        double tau_max;
        double gamma_max_observed;
        double err_inf;
        double order_inf;  // NaN on the first row
        double err_h1;
        double order_h1;
    };
    std::vector<Row> rows;

    void write_csv(const std::string& path) const;
};

// (||c - f||_inf, ||c - f||_{H^1_h}) for same-grid solutions from two time meshes
std::pair<double, double> richardson_errors(const Field& coarse, const Field& fine);

// log(err_c/err_f) / log(ratio); NaN when an error is not positive
double observed_order(double err_coarse, double err_fine, double ratio);

// R = sqrt(A/pi), A = h^2 * #{phi > 0}
double bubble_radius(const Field& phi);

// true iff every sup-norm entry <= 1 + slack
bool mbp_check(const RunSeries& series, double slack);

// least-squares slope of y against t
double regression_slope(const std::vector<double>& t, const std::vector<double>& y);

}  // namespace ac
