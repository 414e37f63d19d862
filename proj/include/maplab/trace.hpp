#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "maplab/common.hpp"

namespace maplab {

struct PhaseCost {
    double service = 0.0, movement = 0.0;
    double t0 = 0.0, t1 = 0.0;
};

struct CostLedger {
    double service = 0.0, movement = 0.0;
    std::vector<PhaseCost> per_phase;

    double total() const { return service + movement; }
};

// Snapshot at an accepted integrator step. `aux` holds the baseline vector b
// (star algorithms) or the Lagrange multipliers per vertex (tree).
struct TraceRecord {
    double t = 0.0;
    Vec x;
    Vec aux;
    double alpha = 0.0;
    double service_cum = 0.0, movement_cum = 0.0;
    double move_inc_cum = 0.0;    // tree: integral of the increasing movement
    double lambda_root_cum = 0.0; // tree: integral of lambda_root
    int phase = -1;
    Vec tracked;
};

struct Trace {
    std::string algo;
    std::vector<std::string> tracked_names;
    std::vector<TraceRecord> records;
};

struct PhaseWindow {
    double t0 = 0.0, t1 = 0.0;
};

struct RunResult {
    Trace trace;
    CostLedger ledger;
    std::vector<PhaseWindow> windows;  // effective window per phase
};

// Columns: t, alpha, service_cum, movement_cum, then one per tracked value.
void write_trace_csv(const Trace& tr, std::ostream& out);

}  // namespace maplab
