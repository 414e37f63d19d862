#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "maplab/metric.hpp"

namespace maplab {

using json = nlohmann::json;

// Non-increasing step cost. Entry (t_j, v_j) applies on [t_{j-1}, t_j);
// the cost is 0 at or beyond the last threshold.
struct StepFn {
    std::vector<std::pair<double, double>> steps;  // thresholds ascending

    double value_at(double x) const;
    // smallest threshold strictly above x, or +inf
    double next_threshold(double x) const;
    void validate() const;
};

// One request: a hinge [s - x_r]_+ or an explicit step cost, active for at
// most T time units. r is a star point index or a leaf vertex id.
struct Phase {
    int r = 0;
    double T = 0.0;
    bool hinge = true;
    double s = 0.0;
    StepFn steps;

    double charge_at(double xr) const {
        return hinge ? pos_part(s - xr) : steps.value_at(xr);
    }
};

struct Instance {
    MetricSpace metric;
    std::vector<Phase> phases;

    void validate() const;
};

json instance_to_json(const Instance& ins);
Instance instance_from_json(const json& j);
Instance load_instance_file(const std::string& path);
void save_instance_file(const Instance& ins, const std::string& path);

}  // namespace maplab
