#pragma once

#include <vector>

#include "maplab/common.hpp"

namespace maplab {

enum class MetricKind { Star, Tree };

// A weighted star (d(i,j) = w_i + w_j) or a rooted weighted tree whose metric
// points are its leaves. Allocations and displacements are always indexed by
// metric points: star points, or leaves in the order of `leaves`.
struct MetricSpace {
    MetricKind kind = MetricKind::Star;

    // star: one weight per point; tree: one weight per vertex (root unused).
    std::vector<double> weights;

    // tree only
    std::vector<int> parent;  // -1 at the root
    std::vector<int> leaves;  // leaf vertex ids, ascending

    // derived tree structure (filled by finalize())
    int root = -1;
    std::vector<std::vector<int>> children;
    std::vector<int> topo;           // parents before children
    std::vector<int> leaf_pos;       // vertex -> index into `leaves`, or -1
    std::vector<int> subtree_leaves; // n_u per vertex

    static MetricSpace star(std::vector<double> w);
    static MetricSpace tree(std::vector<int> parent, std::vector<double> w,
                            std::vector<int> leaves);

    int points() const {
        return kind == MetricKind::Star ? static_cast<int>(weights.size())
                                        : static_cast<int>(leaves.size());
    }
    int vertices() const { return static_cast<int>(weights.size()); }
    bool is_tree() const { return kind == MetricKind::Tree; }
    bool is_uniform_star() const;

    // weight of point index i (star weight, or leaf edge weight)
    double point_weight(int i) const;
    double diameter() const;
    void validate() const;
    void finalize();  // builds the derived structure; called by factories
};

// Movement norm of a displacement indexed by metric points.
double metric_norm(const MetricSpace& m, const Vec& z_points);

// Tree helpers. Values indexed by points (= leaves) aggregate to per-vertex
// subtree sums; the root entry carries the total.
Vec tree_aggregate(const MetricSpace& m, const Vec& leaf_vals);
double tree_leaf_distance(const MetricSpace& m, int leaf_vertex_a, int leaf_vertex_b);
// Pairwise point distances (star: w_i + w_j, tree: path distance of leaves).
std::vector<Vec> point_distances(const MetricSpace& m);

// Simplex feasibility of an allocation (coordinates may be negative).
void check_allocation(const MetricSpace& m, const Vec& x, double tol);

}  // namespace maplab
