#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "maplab/algo_wstar.hpp"
#include "maplab/config.hpp"
#include "maplab/instance.hpp"
#include "maplab/trace.hpp"

namespace maplab {

struct UniformPotentials {
    double p = 0.0, q = 0.0, theta = 0.0;
};
// P sums over {i : x_i >= y_i}; Theta = 12P + 6Q with delta = 1/n.
UniformPotentials potential_uniform(const Vec& x, const Vec& b, const Vec& y);

struct WStarPotentials {
    double d = 0.0, psi = 0.0;
};
WStarPotentials potential_wstar(const MetricSpace& m, const WStarParams& p,
                                const Vec& x, const Vec& b, const Vec& y);

struct TreePotentials {
    double p = 0.0, q = 0.0;
};
TreePotentials potential_tree(const MetricSpace& m, const Vec& x_leaves, const Vec& y_leaves);

// Piecewise-constant offline trajectory: position y_k during phase window k,
// moving by an instantaneous jump at each window start.
struct OfflineTrajectory {
    std::vector<Vec> y_per_phase;

    double movement_cost(const MetricSpace& m, const Vec& x0) const;
    double service_cost(const Instance& ins, const std::vector<PhaseWindow>& windows) const;
};

struct ViolationEntry {
    std::string check;
    int phase = -1;
    double t0 = 0.0, t1 = 0.0;
    double lhs = 0.0, rhs = 0.0;
    std::string state;
};

struct MonitorReport {
    std::string algo;
    long intervals = 0;
    long jumps = 0;
    long pointwise = 0;
    long escalations = 0;  // uniform intervals that needed the doubled constant
    double min_margin = 0.0;
    std::vector<ViolationEntry> violations;

    bool ok() const { return violations.empty(); }
    json to_json() const;
};

// Certifies the differential inequalities of the competitive analysis along a
// joint (online trace, offline trajectory) pair, interval by interval, plus
// the Lipschitz bounds at offline jumps and the pointwise movement bounds.
MonitorReport check_inequalities(const Instance& ins, const RunResult& run,
                                 const OfflineTrajectory& off, const std::string& algo,
                                 const WStarParams* wp, const Config& cfg);

// Central finite difference of D in y_i (step 1e-6). Returns nullopt when the
// probe sits too close to a kink of the potential.
std::optional<double> lipschitz_probe(const MetricSpace& m, const WStarParams& p,
                                      const Vec& x, const Vec& b, const Vec& y, int i);

// Closed-form regime derivatives of D in y_i from the Lipschitz lemma.
double dD_dy_above_b(const MetricSpace& m, const WStarParams& p, int i);
double dD_dy_between(const MetricSpace& m, const WStarParams& p,
                     double xi, double bi, double yi, int i);
double dD_dy_below_x(const MetricSpace& m, const WStarParams& p,
                     double xi, double bi, double yi, int i);

// Monitor constants for the uniform star (delta = 1/n).
double uniform_monitor_constant(int n);   // C_n = 12 (log((1+d)/d) + 3)
double uniform_lipschitz_constant(int n); // 12 (log((1+d)/d) + 1) + 12

}  // namespace maplab
