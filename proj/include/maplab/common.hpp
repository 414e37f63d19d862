#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace maplab {

using Vec = std::vector<double>;

// Error taxonomy mirrored by the CLI exit codes: input -> 1,
// invariant/verification -> 2, resource -> 3.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double pos_part(double a) { return a > 0.0 ? a : 0.0; }

inline double vec_sum(const Vec& v) {
    double s = 0.0;
    for (double a : v) s += a;
    return s;
}

inline double abs_sum(const Vec& v) {
    double s = 0.0;
    for (double a : v) s += std::fabs(a);
    return s;
}

using Rng = std::mt19937_64;

inline double rand_uniform(Rng& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline int rand_int(Rng& g, int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(g);
}

// Random point of the simplex on a 1/g grid (exact rational coordinates).
Vec rand_grid_simplex(Rng& g, int n, int grid);

std::string format_vec(const Vec& v);

}  // namespace maplab
