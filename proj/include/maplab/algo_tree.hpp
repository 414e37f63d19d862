#pragma once

#include "maplab/config.hpp"
#include "maplab/instance.hpp"
#include "maplab/trace.hpp"

namespace maplab {

// Solution of the tree-structured KKT system for a charge alpha at a leaf:
// the unique multipliers (0 on leaves, free on internal vertices and the
// root) making x_u' = (alpha 1_{u=l} + lambda_u - lambda_{p(u)})/w_u satisfy
// the flow constraints x_u' = sum_{v child of u} x_v' and x_root' = 0.
struct TreeSolve {
    Vec lambda;  // per vertex
    Vec dx;      // per vertex; dx[root] == 0
};

// Two tree passes: upward elimination expressing each subtree derivative as
// an affine function of the parent multiplier, then downward substitution.
TreeSolve lagrange_solve(const MetricSpace& tree, int leaf_vertex, double alpha);

RunResult run_tree(const Instance& ins, const Vec& x0_leaves, const Config& cfg);
RunResult run_tree(const Instance& ins, const Config& cfg);

}  // namespace maplab
