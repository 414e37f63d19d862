#pragma once

#include "maplab/config.hpp"
#include "maplab/instance.hpp"
#include "maplab/trace.hpp"

namespace maplab {

struct WStarParams {
    int n = 2;
    double epsilon = 0.25;
    double delta = 0.0;  // 1 / max{n^2, e^{3/eps}}
    double eta = 0.0;    // (1 + delta) log((1 + delta)/delta)
    double beta = 0.0;   // 1 + 2/eta

    static WStarParams make(int n, double epsilon);
};

// Allocation x plus baseline b with x_i < b_i <= 2.
struct WStarState {
    Vec x, b;

    int n() const { return static_cast<int>(x.size()); }
    double scale() const;  // S = sum(b_i - x_i)
    void check(double tol_simplex) const;
};

// x_i = 1/n, b_i = min(2, x_i + 1/n).
WStarState default_wstar_state(int n);

double wstar_gamma(const MetricSpace& m, const WStarParams& p, const WStarState& st);

// Mirror-descent dynamics for a charge alpha > 0 at point r:
//   x_i' = eta (b_r - x_r)/w_r (1_{i=r} - (b_i - x_i + dS)/(gamma w_i S))
//   b_r' = alpha/w_r         if b_r - x_r <= 2 alpha
//        = -(b_r - x_r)/(2 w_r) otherwise;   b_i' = 0 for i != r.
void wstar_derivative(const MetricSpace& m, const WStarParams& p, const WStarState& st,
                      int r, double alpha, Vec& dx, Vec& db);

// Residual of the mirror-descent identity H x' = f - lambda 1 with the
// diagonal Hessian H_ii = w_i/(eta (b_i - x_i + dS)), control
// f = a e_r, a = (b_r - x_r)/(b_r - x_r + dS), and the closed-form lambda.
// Returns the max-norm of the residual.
double md_consistency_check(const MetricSpace& m, const WStarParams& p,
                            const WStarState& st, int r, double alpha);

RunResult run_wstar(const Instance& ins, const WStarState& init, const WStarParams& p,
                    const Config& cfg);
RunResult run_wstar(const Instance& ins, const Config& cfg);

}  // namespace maplab
