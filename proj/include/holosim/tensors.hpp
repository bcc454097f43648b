#pragma once

#include <complex>
#include <vector>

namespace holosim {

// Dense tensor with L legs of equal dimension nu, stored row major with leg 0
// as the most significant index.
struct PerfectTensorData {
    int legs = 0;
    int nu = 2;
    std::vector<std::complex<double>> amps;
};

struct IsometryReport {
    double max_deviation = 0.0;     // worst ||M M^dag - c I||_inf over bipartitions
    std::vector<int> worst_subset;  // row-side legs of the worst bipartition
    int bipartitions = 0;
    bool perfect = false;  // max_deviation <= 1e-10
};

// Supported: (legs=6, nu=2), the six-leg tensor of the [[5,1,3]] code, and
// (legs=4, nu odd prime) from the qudit construction sum_ij |i,j,i+j,i+2j>.
// Anything else, including (4,2), signals unsupported.
PerfectTensorData make_perfect_tensor(int legs, int nu);

// Checks every bipartition with 1 <= |A| <= legs/2, reshaping A to rows; the
// best scalar c is tr(M M^dag)/rows.
IsometryReport check_perfect_isometry(const PerfectTensorData& t);

}  // namespace holosim
