#pragma once

#include <map>
#include <string>

namespace maplab {

// Every tolerance and integrator parameter lives here. Values can be loaded
// from a key=value file (MAP_LAB_CONFIG or --config) and overridden by CLI
// flags.
struct Config {
    // integrator
    double h_init = 1e-3;
    double h_max = 0.05;
    double h_min = 1e-12;        // step underflow below this is a hard error
    double coord_cap_rel = 1e-3; // max per-step coordinate change, relative to S
    double eps_hold = 1e-8;      // phase ends once the charge drops below this
    double bisect_tol = 1e-10;   // time tolerance for event bisection
    double tol_simplex = 1e-9;
    unsigned long max_steps = 50000000;

    // wstar parameters
    double epsilon = 0.25;

    // inequality monitor
    double tol_ineq = 1e-5;   // per-interval tolerance, scaled by dt
    double tol_abs = 1e-12;   // roundoff floor
    double tol_jump = 1e-9;   // offline-jump checks
    double cn_scale = 1.0;    // scales the uniform monitor constant C_n

    // reductions / encoders
    double penalty_slope = 1e3;  // Appendix-A non-negativity penalty "a"
    double penalty_base_t = 0.02;
    double hold_t = 100.0;       // duration cap of one hold phase
    double encode_eps_hold = 1e-6;
    int split_rounds = 1;        // cyclic repetitions N for cost splitting

    // offline oracle
    int dp_grid = 40;
    unsigned long dp_max_entries = 10000000;

    // embedding
    double eps_leaf_rel = 1e-6;

    void set(const std::string& key, const std::string& value);
    void load_file(const std::string& path);
    std::map<std::string, double> items() const;
};

// Default config, honoring the MAP_LAB_CONFIG environment variable.
Config default_config();

}  // namespace maplab
