#pragma once

#include <functional>

#include "maplab/config.hpp"
#include "maplab/instance.hpp"
#include "maplab/trace.hpp"

namespace maplab {

// Unit-slope hinge equivalent of a convex non-increasing cost at x_r: the
// tangent hinge rescaled to slope -1. Issuing the unit hinge for
// `multiplier` times the original window reproduces the cost.
struct HingeParams {
    double s = 0.0;
    double multiplier = 0.0;
};
HingeParams linearize_convex(const std::function<double(double)>& c, double x_r);

// Separable cost split into per-point unit hinges, N cyclic rounds scaled by
// 1/N. Input: per-point (intercept, slope) pairs; window length T.
std::vector<Phase> split_single_location(const std::vector<std::pair<double, double>>& costs,
                                         double T, int N);

// Appendix-B correspondence x_hat = (1 - x)/(n - 1).
Vec flip_forward(const Vec& x);
Vec flip_backward(const Vec& xhat);

// Non-decreasing hinge (x_r - s)_+ active for T time units.
struct NonDecHinge {
    int r = 0;
    double s = 0.0;
    double T = 0.0;
};
Instance flip_monotonicity(const MetricSpace& m, const std::vector<NonDecHinge>& phases);

struct DiscretizeResult {
    std::vector<Vec> states;   // one per phase
    std::vector<double> times;
    Vec charges;               // instantaneous charge at the chosen points
    double movement = 0.0;     // triangle-inequality jump cost
};
DiscretizeResult discretize_trajectory(const Instance& ins, const RunResult& run);

// Interleaves penalty hinges at intercept 0 (slope a realized by duration
// a * penalty_base_t) for every coordinate after each original phase.
Instance nonneg_penalty(const Instance& ins, double a, const Config& cfg);

// MTS cost vectors -> MAP instance on the uniform star via the Appendix-B
// flip; per-step linear costs become unit hinges at 1/(n-1) with duration
// alpha_{t,i} * t_base.
Instance encode_mts(int n, const std::vector<Vec>& cost_vectors, double t_base = 1.0);

struct KServerEncoding {
    Instance instance;
    Vec offsets;
    double scale = 1.0;
    int k = 1;
    std::vector<int> phase_of_request;  // instance phase index serving request t
};
// Requests realized as hold phases driving x_r >= a_r + scale/k, with floor
// phases x_j >= a_j interleaved after each request when offsets are used.
KServerEncoding encode_kserver(int n, const std::vector<int>& requests, int k,
                               const Vec& offsets, bool scale_flag, const Config& cfg);

}  // namespace maplab
