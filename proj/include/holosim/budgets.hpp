#pragma once

#include "holosim/logscaled.hpp"
#include "holosim/sim.hpp"

#include <boost/rational.hpp>
#include <vector>

namespace holosim {

struct QPEParams {
    LogScaled sparsity;
    LogScaled spins;
    LogScaled h_norm;
    LogScaled accuracy;  // phase-estimation resolution
};

struct QPERuntime {
    LogScaled t_u;
    LogScaled t_pe;
    double log4_scale = 0;      // log4(sparsity * h_norm / accuracy)
    bool coarse_accuracy = false;  // accuracy no finer than the norm scale
    bool small_log = false;        // log4_scale <= 1, trailing factor dropped
};

QPERuntime qpe_runtime(const QPEParams& p);

// Phase-estimation history state padded with idle steps: total steps
// T = (1 + lambda) * T_PE.
struct HistoryStateModel {
    LogScaled j;
    LogScaled t_pe;
    double lambda = 9;
};

struct HistoryErrors {
    LogScaled eta;
    LogScaled eps;
    LogScaled delta;
    LogScaled total_steps;
};

HistoryErrors history_state_errors(const HistoryStateModel& m, const LogScaled& h_norm,
                                   const LogScaled& accuracy);

LogScaled required_heavy_norm_j(const LogScaled& delta, const LogScaled& steps,
                                const LogScaled& h_norm, const LogScaled& eta,
                                const LogScaled& eps);

// Interaction-strength exponents of the sparse history-state simulator,
// exact: (L^4/eps^5)^(1/6) and (L^3/(eta eps^3))^(1/4).
struct SparseExponents {
    boost::rational<long long> a, b, x, y, z;
    boost::rational<long long> sum_ab;   // a + 2b
    boost::rational<long long> sum_xyz;  // x + 2y + z
    ExponentTuple tuple;
};

SparseExponents sparse_history_exponents();

enum class ScenarioKind { general, k_local };

struct ScenarioParams {
    ScenarioKind kind = ScenarioKind::general;
    int n = 16;
    int R = 4;
    double tau = 2.0;
    double alpha = 5.0;
    double beta = 5.0;
    double alpha_loc = 7.0;
    double beta_loc = 7.0;
    int k = 2;
};

// All entries are natural logs of scaling-unit quantities.
struct ScenarioReport {
    ScenarioKind kind = ScenarioKind::general;
    double ln_eta = 0;
    double ln_eps = 0;
    double ln_delta = 0;
    double ln_budget = 0;  // admissible computation budget |H_bulk| t
    double ln_final = 0;   // end-to-end state error 2 eps t
    double ln_h_norm = 0;
    double ln_tpe = 0;
    bool eta_dominates = false;
    bool good = false;  // gap above the norm scale and eps below it
};

ScenarioReport scenario_report(const ScenarioParams& p);

struct AttackRound {
    double eps = 0;
    double eta = 0;
    double t = 0;
};

struct AttackSchedule {
    int n = 1;
    int R = 0;
    double tau = 2.0;
    std::vector<AttackRound> inbound;
    std::vector<AttackRound> outbound;
    AttackRound central;
};

AttackSchedule canonical_attack_schedule(int n, double tau, int R);

struct AttackBudget {
    double swap_in = 0;
    double swap_out = 0;
    double central = 0;
    double total = 0;
};

AttackBudget attack_error_budget(const AttackSchedule& s);

struct NormExponents {
    LogScaled ab;
    LogScaled xyz;
};

NormExponents attack_norm_exponent(const ExponentTuple& e, int r, int n, double tau, int R);

}  // namespace holosim
