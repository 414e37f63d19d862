#pragma once

#include "maplab/config.hpp"
#include "maplab/instance.hpp"
#include "maplab/trace.hpp"

namespace maplab {

// Online state of the uniform-star algorithm: allocation x plus the baseline
// vector b with b_i > x_i. The rate variables are rho_i = b_i - x_i and the
// scale estimate is S = sum_i rho_i.
struct UniformState {
    Vec x, b;

    int n() const { return static_cast<int>(x.size()); }
    double rho(int i) const { return b[i] - x[i]; }
    double scale() const;
    void check(double tol_simplex) const;
};

// x_i = 1/n, b_i = x_i + 1/n (so S = 1 initially).
UniformState default_uniform_state(int n);

// Coupled derivative for a charge alpha >= 0 at point r:
//   x_i' = alpha (1_{i=r} - (rho_i + dS)/(2S)),  d = 1/n
//   b_r' = +alpha if alpha > rho_r, -alpha if alpha < rho_r, 0 at the tie;
//   b_i' = 0 otherwise.
void uniform_derivative(const UniformState& st, int r, double alpha, Vec& dx, Vec& db);

RunResult run_uniform(const Instance& ins, const UniformState& init, const Config& cfg);
RunResult run_uniform(const Instance& ins, const Config& cfg);

}  // namespace maplab
