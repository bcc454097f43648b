#include "holosim/budgets.hpp"

#include "holosim/errors.hpp"

#include <algorithm>
#include <cmath>

namespace holosim {
namespace {

void need_positive(const LogScaled& v, const char* name) {
    if (v.sign() <= 0) throw invalid_argument_error(std::string(name) + " must be positive");
}

double log_sum(double ln_a, double ln_b) {
    double hi = std::max(ln_a, ln_b);
    return hi + std::log1p(std::exp(std::min(ln_a, ln_b) - hi));
}

void check_round(const AttackRound& r, const char* name) {
    if (r.eps <= 0 || r.eta <= 0 || r.t <= 0)
        throw invalid_argument_error(std::string(name) + " entries must be positive");
}

}  // namespace

QPERuntime qpe_runtime(const QPEParams& p) {
    need_positive(p.sparsity, "sparsity");
    need_positive(p.spins, "spin count");
    need_positive(p.h_norm, "target norm");
    need_positive(p.accuracy, "accuracy");

    QPERuntime out;
    LogScaled ratio = p.h_norm / p.accuracy;
    out.coarse_accuracy = !LogScaled::from_value(1).same_sign_less(ratio);
    out.log4_scale = (p.sparsity * ratio).log_magnitude() / std::log(4.0);

    double ell = out.log4_scale;
    LogScaled ell_term = ell > 0 ? LogScaled::from_value(std::pow(ell, 2.5)) : LogScaled();
    LogScaled factor = LogScaled::from_value(1);
    if (ell > 1) {
        factor = LogScaled::from_value(ell / std::log(ell));
    } else {
        out.small_log = true;
    }
    out.t_u = p.sparsity * (LogScaled::from_value(1) + p.spins + ell_term) * factor;
    out.t_pe = ratio * out.t_u;
    return out;
}

HistoryErrors history_state_errors(const HistoryStateModel& m, const LogScaled& h_norm,
                                   const LogScaled& accuracy) {
    need_positive(m.j, "heavy norm");
    need_positive(m.t_pe, "phase-estimation steps");
    need_positive(h_norm, "target norm");
    need_positive(accuracy, "accuracy");
    if (m.lambda < 1) throw invalid_argument_error("idle multiple must be at least 1");

    HistoryErrors out;
    LogScaled steps = m.t_pe * LogScaled::from_value(1.0 + m.lambda);
    out.total_steps = steps;
    out.eta = steps.pow(3) * h_norm / m.j + LogScaled::from_value(1.0 / (1.0 + m.lambda));
    out.eps = accuracy + steps.pow(4) * h_norm * h_norm / m.j;
    out.delta = m.j / (LogScaled::from_value(2) * steps * steps);
    return out;
}

LogScaled required_heavy_norm_j(const LogScaled& delta, const LogScaled& steps,
                                const LogScaled& h_norm, const LogScaled& eta,
                                const LogScaled& eps) {
    need_positive(delta, "gap");
    need_positive(steps, "step count");
    need_positive(h_norm, "target norm");
    need_positive(eta, "state error");
    need_positive(eps, "spectral error");
    return delta * steps.pow(2) + steps.pow(3) * h_norm / eta + steps.pow(4) * h_norm / eps;
}

SparseExponents sparse_history_exponents() {
    using rat = boost::rational<long long>;
    SparseExponents s;
    s.a = rat(2, 3);
    s.b = rat(5, 6);
    s.x = rat(3, 4);
    s.y = rat(3, 4);
    s.z = rat(1, 4);
    s.sum_ab = s.a + 2 * s.b;
    s.sum_xyz = s.x + 2 * s.y + s.z;
    s.tuple.a = boost::rational_cast<double>(s.a);
    s.tuple.b = boost::rational_cast<double>(s.b);
    s.tuple.x = boost::rational_cast<double>(s.x);
    s.tuple.y = boost::rational_cast<double>(s.y);
    s.tuple.z = boost::rational_cast<double>(s.z);
    return s;
}

ScenarioReport scenario_report(const ScenarioParams& p) {
    if (p.n < 3) throw invalid_argument_error("scenario needs n >= 3");
    if (p.tau <= 1) throw invalid_argument_error("growth rate must exceed 1");
    if (p.R < 0) throw invalid_argument_error("radius must be non-negative");
    if (p.alpha <= 0) throw invalid_argument_error("norm exponent must be positive");
    if (p.beta != p.alpha)
        throw unsupported_error("only the accuracy-matches-norm working point is evaluated");

    double ln_n = std::log(static_cast<double>(p.n));
    double ln4 = std::log(4.0);
    double ln_tau = std::log(p.tau);
    double lln = std::log(ln_n);
    double n = p.n, R = p.R, al = p.alpha;

    ScenarioReport rep;
    rep.kind = p.kind;
    if (p.kind == ScenarioKind::general) {
        rep.ln_eta = (3 - al) * n * ln4 - al * R * ln_tau +
                     log_sum(6 * ln_n + 3 * R * ln_tau, 10.5 * ln_n) - 3 * lln;
        rep.ln_eps = 2 * (2 - al) * n * ln4 - 2 * al * R * ln_tau +
                     log_sum(8 * ln_n + 4 * R * ln_tau, 14 * ln_n) - 4 * lln;
        rep.ln_delta = 2 * lln - 2 * n * ln4 - log_sum(2 * ln_n + 2 * R * ln_tau, 7 * ln_n);
        rep.ln_budget = ln_n - al * n * ln4 - (al - 1) * R * ln_tau;
        rep.ln_h_norm = -al * R * ln_tau - al * n * ln4;
    } else {
        if (p.k < 1) throw invalid_argument_error("interaction locality must be at least 1");
        if (p.alpha_loc <= 0) throw invalid_argument_error("norm exponent must be positive");
        if (p.beta_loc != p.alpha_loc)
            throw unsupported_error("only the accuracy-matches-norm working point is evaluated");
        double k = p.k, al2 = p.alpha_loc;
        double llln = std::log(lln);
        rep.ln_eta =
            ((3 - al2) * k + 3) * ln_n + (3 - al) * R * ln_tau + 3 * lln - 3 * llln;
        rep.ln_eps =
            (2 * (2 - al2) * k + 4) * ln_n + 2 * (2 - al) * R * ln_tau + 4 * lln - 4 * llln;
        rep.ln_delta = 2 * llln - 2 * (k + 1) * ln_n - 2 * R * ln_tau - 2 * lln;
        rep.ln_budget = (1 - al2 * k) * ln_n - (al - 1) * R * ln_tau;
        rep.ln_h_norm = -al * R * ln_tau - al2 * k * ln_n;
    }
    rep.ln_final = rep.ln_eps + ln_n + R * ln_tau;
    rep.eta_dominates = rep.ln_eta > rep.ln_budget;
    rep.good = rep.ln_delta > rep.ln_h_norm && rep.ln_eps < rep.ln_h_norm;

    QPEParams qp;
    qp.sparsity = p.kind == ScenarioKind::general ? pow_of(4.0, n) : pow_of(n, p.k);
    qp.spins = LogScaled::from_value(n) * pow_of(p.tau, R);
    qp.h_norm = LogScaled::from_value(1);
    qp.accuracy = LogScaled::from_value(1);
    rep.ln_tpe = qpe_runtime(qp).t_pe.log_magnitude();
    return rep;
}

AttackSchedule canonical_attack_schedule(int n, double tau, int R) {
    if (n < 1) throw invalid_argument_error("bundle size must be positive");
    if (tau <= 1) throw invalid_argument_error("growth rate must exceed 1");
    if (R < 0) throw invalid_argument_error("radius must be non-negative");
    AttackSchedule s;
    s.n = n;
    s.R = R;
    s.tau = tau;
    for (int r = 0; r <= R; ++r) {
        AttackRound round;
        round.eps = std::pow(tau, 2.0 * (r - R)) / (static_cast<double>(n) * n);
        round.eta = std::pow(tau, static_cast<double>(r - R)) / n;
        round.t = n * std::pow(tau, static_cast<double>(R - r));
        s.inbound.push_back(round);
        s.outbound.push_back(round);
    }
    s.central.eps = 1.0 / (static_cast<double>(n) * n);
    s.central.eta = 1.0 / n;
    s.central.t = n * std::pow(tau, static_cast<double>(R)) / 8.0;
    return s;
}

AttackBudget attack_error_budget(const AttackSchedule& s) {
    if (s.n < 1 || s.tau <= 1 || s.R < 0) throw invalid_argument_error("bad schedule header");
    size_t want = static_cast<size_t>(s.R) + 1;
    if (s.inbound.size() != want || s.outbound.size() != want)
        throw invalid_argument_error("schedule must carry one round per layer");
    for (const AttackRound& r : s.inbound) check_round(r, "inbound");
    for (const AttackRound& r : s.outbound) check_round(r, "outbound");
    check_round(s.central, "central");
    if (s.central.t >= s.n * std::pow(s.tau, static_cast<double>(s.R)) / 4.0)
        throw invalid_argument_error("central run time must stay below a quarter boundary period");

    AttackBudget b;
    for (const AttackRound& r : s.inbound) b.swap_in += 2.0 * r.eps * r.t + r.eta;
    for (const AttackRound& r : s.outbound) b.swap_out += 2.0 * r.eps * r.t + r.eta;
    b.central = 2.0 * s.central.eps * s.central.t + s.central.eta;
    b.total = b.swap_in + b.swap_out + b.central;
    return b;
}

NormExponents attack_norm_exponent(const ExponentTuple& e, int r, int n, double tau, int R) {
    if (n < 1) throw invalid_argument_error("bundle size must be positive");
    if (tau <= 1) throw invalid_argument_error("growth rate must exceed 1");
    if (r < 0 || r > R) throw invalid_argument_error("round out of range");
    double ln_scale = std::log(static_cast<double>(n)) + (R - r) * std::log(tau);
    NormExponents out;
    out.ab = LogScaled::from_log((e.a + 2 * e.b - 1) * ln_scale);
    out.xyz = LogScaled::from_log((e.x + 2 * e.y + e.z - 1) * ln_scale);
    return out;
}

}  // namespace holosim
