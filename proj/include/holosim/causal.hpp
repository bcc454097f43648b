#pragma once

#include "holosim/network.hpp"

#include <vector>

namespace holosim {

struct DilationParams {
    double tau = 2.0;
    int R = 0;
    int n = 1;
    int m = 1;
};

// Per-layer interaction norms, index x in [0, R].
struct NormSchedule {
    std::vector<double> h;
};

struct LRParams {
    int k = 1;
    double s = 0.0;
    double mu = 1.0;
};

struct TransitTimes {
    double t1 = 0;  // radial round trip through the bulk
    double t2 = 0;  // trip around the truncated boundary
    double ratio = 0;
};

struct ConeRow {
    int layer = 0;
    double bulk_time = 0;
    long long cone_qubits = 0;
    double velocity = 0;
};

// Boundary light-cone growth of a perturbation sinking from the boundary
// layer toward the center. need[x] is the fewest contiguous boundary legs
// whose entanglement wedge reaches layer x; rows cover x = R-1 down to 0.
struct ConeProfile {
    std::vector<ConeRow> rows;
    std::vector<long long> need;
};

double layer_radius(int x, double tau, int n);

// tau^(R-x) by default; exact=true evaluates the underlying cosh ratio.
double dilation_factor(int x, const DilationParams& params, bool exact = false);

NormSchedule norm_schedule(const DilationParams& params);
NormSchedule uniform_schedule(int R);

TransitTimes transit_times(const DilationParams& params);

double lr_velocity(const LRParams& params);

// v_bulk(x) = 2*h[x] per layer.
std::vector<double> bulk_lr_profile(const NormSchedule& schedule);

ConeProfile butterfly_profile(const LayeredNetwork& net, const NormSchedule& schedule);
ConeProfile butterfly_profile_serial(const LayeredNetwork& net, const NormSchedule& schedule);

}  // namespace holosim
