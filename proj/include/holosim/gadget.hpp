#pragma once

#include "holosim/dense.hpp"
#include "holosim/logscaled.hpp"
#include "holosim/sim.hpp"

#include <string>
#include <utility>
#include <vector>

namespace holosim {

// Mediator-qudit gadget replacing one product interaction by two, ordered
// A (x) B (x) mediator. h0 = heavy * projector off the mediator ground state;
// the full Hamiltonian is h0 + h1 + sqrt(heavy) * h2.
struct GadgetInstance {
    MatrixC p_a;
    MatrixC p_b;
    double delta0 = 0;
    double heavy = 0;
    int p = 3;
    MatrixC h0;
    MatrixC h1;
    MatrixC h2;
    MatrixC target;
};

GadgetInstance build_subdivision_gadget(const MatrixC& p_a, const MatrixC& p_b, double delta0,
                                        double heavy, int p = 3);

MatrixC gadget_hamiltonian(const GadgetInstance& g);

// Norm of the second-order effective Hamiltonian minus the target, on the
// mediator ground block; exactly 0 for the subdivision gadget.
double second_order_residual(const GadgetInstance& g);

struct GadgetCertificate {
    SimulationCertificate cert;
    double lambda = 0;     // max(|h1|, |h2|)
    bool heavy_ok = false; // advisory: heavy >= lambda^6/eps^2 + lambda^2/eta^2
};

GadgetCertificate verify_second_order(const GadgetInstance& g, double eps, double eta);

// Interaction-strength ladder delta_x = 4 sum_{l<x} delta_l / 2^(x-l):
// value both by recursion and by the closed form 5^(x-1)/2^(x-2) delta_0.
std::pair<double, double> delta_sequence(int x, double delta0);
bool delta_exact_match(int x);
// sum_{l<=r} delta_l / 2^(r-l) == (5/2)^r delta_0 in exact rationals.
bool delta_identity_holds(int r);

struct RecursionSchedule {
    double delta0 = 0.01;
    int rounds = 5;
    double tau = 2.0;
    int R = 1;
    int n = 2;
    double b = 1.0;
};

struct RecursionRow {
    int round = 0;
    double log_tau_ht = 0;
    double log_tau_eps = 0;
    double log_tau_eta = 0;
};

struct RecursionReport {
    std::vector<RecursionRow> rows;
    LogScaled eps;
    LogScaled eta;
    LogScaled delta1;
    LogScaled delta;  // delta1 - eps; negative means the gap is swamped
    double log_tau_hsim = 0;
    bool identity_ok = false;
    std::string flag;
};

RecursionReport recursion_report(const RecursionSchedule& s);

struct BudgetBound {
    LogScaled bound;
    bool degenerate = false;  // n = 1 carries no log(n) suppression
};

BudgetBound perturbative_budget(double tau, int n, int R);

}  // namespace holosim
