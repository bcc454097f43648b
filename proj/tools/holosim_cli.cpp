#include "holosim/budgets.hpp"
#include "holosim/causal.hpp"
#include "holosim/chain.hpp"
#include "holosim/config.hpp"
#include "holosim/contraction.hpp"
#include "holosim/cuts.hpp"
#include "holosim/errors.hpp"
#include "holosim/gadget.hpp"
#include "holosim/network.hpp"
#include "holosim/sim.hpp"
#include "holosim/tensors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace {

using holosim::Config;
using json = nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct RunContext {
    Config cfg;
    std::filesystem::path out_dir = ".";
    long seed = 0;
    int dense_limit = 20;
};

// FNV-1a over the canonical {command, inputs, outputs} dump. nlohmann objects
// serialize with sorted keys, so the hash is stable across runs.
std::string content_hash(const json& canonical) {
    std::string bytes = canonical.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json log_json(const holosim::LogScaled& v) {
    json j;
    j["sign"] = v.sign();
    if (v.is_zero()) {
        j["log2"] = nullptr;
        j["value"] = 0.0;
    } else {
        j["log2"] = v.log_magnitude() / std::numbers::ln2;
        double d = v.value();
        j["value"] = std::isfinite(d) ? json(d) : json();
    }
    return j;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw holosim::config_error("cannot write " + path.string());
    out << text;
}

void write_report(const RunContext& ctx, const std::string& command, const json& inputs,
                  const json& outputs, std::chrono::steady_clock::time_point started) {
    json canonical;
    canonical["command"] = command;
    canonical["inputs"] = inputs;
    canonical["outputs"] = outputs;
    json report = canonical;
    report["version"] = kVersion;
    report["content_hash"] = content_hash(canonical);
    auto elapsed = std::chrono::steady_clock::now() - started;
    report["wall_clock_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    write_file(ctx.out_dir / "report.json", report.dump(2) + "\n");
    std::cout << report.dump(2) << "\n";
}

holosim::TessellationSpec tessellation_from(const RunContext& ctx) {
    holosim::TessellationSpec s;
    s.p = static_cast<int>(ctx.cfg.get_int("p", s.p));
    s.q = static_cast<int>(ctx.cfg.get_int("q", s.q));
    s.R = static_cast<int>(ctx.cfg.get_int("r", s.R));
    s.n = static_cast<int>(ctx.cfg.get_int("n", s.n));
    s.m = static_cast<int>(ctx.cfg.get_int("m", s.m));
    s.tensor_kind = ctx.cfg.get_string("tensor", s.tensor_kind);
    s.dense_limit = ctx.dense_limit;
    return s;
}

json tessellation_inputs(const holosim::TessellationSpec& s) {
    json j;
    j["p"] = s.p;
    j["q"] = s.q;
    j["r"] = s.R;
    j["n"] = s.n;
    j["m"] = s.m;
    j["tensor"] = s.tensor_kind;
    j["dense_limit"] = s.dense_limit;
    return j;
}

long long boundary_qubit_count(const holosim::LayeredNetwork& net) {
    long long q = 0;
    for (int leg : net.boundary_legs) q += net.legs[leg].qubits;
    return q;
}

long long bulk_qubit_count(const holosim::LayeredNetwork& net) {
    return static_cast<long long>(net.tensor_count()) * net.spec.n;
}

json isometry_json(const holosim::IsometryReport& r) {
    json j;
    j["perfect"] = r.perfect;
    j["max_deviation"] = r.max_deviation;
    j["bipartitions"] = r.bipartitions;
    return j;
}

void run_build_network(const RunContext& ctx) {
    auto started = std::chrono::steady_clock::now();
    auto spec = tessellation_from(ctx);
    auto net = holosim::build_tessellation(spec);

    json outputs;
    outputs["layer_counts"] = net.layer_counts;
    outputs["tensor_count"] = net.tensor_count();
    outputs["leg_count"] = net.leg_count();
    outputs["boundary_leg_count"] = net.boundary_legs.size();
    outputs["boundary_qubits"] = boundary_qubit_count(net);
    if (spec.R >= 2) outputs["growth_rate"] = holosim::measure_growth_rate(net);

    json checks;
    checks["six_leg"] =
        isometry_json(holosim::check_perfect_isometry(holosim::make_perfect_tensor(6, 2)));
    checks["qutrit"] =
        isometry_json(holosim::check_perfect_isometry(holosim::make_perfect_tensor(4, 3)));
    outputs["tensor_checks"] = checks;

    if (boundary_qubit_count(net) <= ctx.dense_limit) {
        auto state = holosim::contract_to_boundary_state(net);
        json c;
        c["qubits"] = state.qubits;
        c["norm"] = state.norm;
        outputs["boundary_state"] = c;
        if (boundary_qubit_count(net) + bulk_qubit_count(net) <= ctx.dense_limit) {
            auto iso = holosim::bulk_to_boundary_isometry(net);
            holosim::MatrixC gram = iso.adjoint() * iso;
            gram -= holosim::MatrixC::Identity(gram.rows(), gram.cols());
            outputs["bulk_isometry_deviation"] = gram.cwiseAbs().maxCoeff();
        }
    }

    write_file(ctx.out_dir / "edges.txt", holosim::export_edge_list(net));
    outputs["edge_file"] = "edges.txt";
    write_report(ctx, "build-network", tessellation_inputs(spec), outputs, started);
}

json cut_json(const holosim::CutResult& c) {
    json j;
    j["capacity"] = c.capacity;
    j["severed"] = c.severed;
    j["region_tensors"] = c.region_side.size();
    j["complement_tensors"] = c.complement_side.size();
    return j;
}

void run_entropy_bounds(const RunContext& ctx) {
    auto started = std::chrono::steady_clock::now();
    auto spec = tessellation_from(ctx);
    auto net = holosim::build_tessellation(spec);
    std::vector<int> fallback(net.boundary_walk.begin(),
                              net.boundary_walk.begin() +
                                  std::min<std::size_t>(3, net.boundary_walk.size()));
    std::vector<int> region = ctx.cfg.get_int_list("region", fallback);

    json inputs = tessellation_inputs(spec);
    inputs["region"] = region;

    json outputs;
    outputs["cut"] = cut_json(holosim::min_cut(net, region));
    auto greedy = holosim::greedy_geodesic(net, region);
    json g;
    g["cut_region"] = greedy.cut_region;
    g["cut_complement"] = greedy.cut_complement;
    g["capacity_region"] = greedy.capacity_region;
    g["capacity_complement"] = greedy.capacity_complement;
    g["overlap_qubits"] = greedy.overlap_qubits;
    outputs["greedy"] = g;
    auto bounds = holosim::entropy_bounds(net, region);
    outputs["lower_bits"] = bounds.first;
    outputs["upper_bits"] = bounds.second;
    if (boundary_qubit_count(net) <= ctx.dense_limit) {
        auto state = holosim::contract_to_boundary_state(net);
        double exact = holosim::exact_region_entropy(state, region);
        outputs["exact_bits"] = exact;
        outputs["sandwich_ok"] =
            bounds.first <= exact + 1e-9 && exact <= bounds.second + 1e-9;
    }
    write_report(ctx, "entropy-bounds", inputs, outputs, started);
}

void run_mi_budget(const RunContext& ctx) {
    auto started = std::chrono::steady_clock::now();
    auto spec = tessellation_from(ctx);
    if (!ctx.cfg.has("r")) spec.R = 1;
    auto net = holosim::build_tessellation(spec);
    std::vector<int> v = ctx.cfg.get_int_list("v", {7, 8, 18});
    std::vector<int> w = ctx.cfg.get_int_list("w", {9, 10, 21});

    json inputs = tessellation_inputs(spec);
    inputs["v"] = v;
    inputs["w"] = w;

    auto budget = holosim::mutual_info_budget(net, v, w);
    json outputs;
    outputs["upper_bits"] = budget.upper_bits;
    outputs["gamma_v"] = budget.gamma_v;
    outputs["gamma_w"] = budget.gamma_w;
    outputs["overlap"] = budget.overlap;
    outputs["c1_bits_per_n"] = budget.c1_bits_per_n;

    std::vector<int> joint = v;
    joint.insert(joint.end(), w.begin(), w.end());
    std::sort(joint.begin(), joint.end());
    outputs["joint_cut_bits"] = holosim::min_cut(net, joint).capacity;

    if (ctx.cfg.has("qpv_gamma_v") || ctx.cfg.has("qpv_gamma_w")) {
        int gv = static_cast<int>(ctx.cfg.get_int("qpv_gamma_v", 2 * spec.R));
        int gw = static_cast<int>(ctx.cfg.get_int("qpv_gamma_w", 2 * spec.R));
        inputs["qpv_gamma_v"] = gv;
        inputs["qpv_gamma_w"] = gw;
        outputs["qpv_bits"] = holosim::qpv_total_entanglement(spec.R, spec.n, gv, gw);
    } else {
        outputs["qpv_bits"] = holosim::qpv_total_entanglement(spec.R, spec.n);
    }
    write_report(ctx, "mi-budget", inputs, outputs, started);
}

std::string cone_csv(const holosim::ConeProfile& profile) {
    std::string text = "layer,bulk_time,cone_qubits,velocity\n";
    char line[128];
    for (const auto& row : profile.rows) {
        std::snprintf(line, sizeof(line), "%d,%.12g,%lld,%.12g\n", row.layer, row.bulk_time,
                      row.cone_qubits, row.velocity);
        text += line;
    }
    return text;
}

void run_causal_check(const RunContext& ctx) {
    auto started = std::chrono::steady_clock::now();
    holosim::DilationParams dp;
    dp.tau = ctx.cfg.get_real("tau", 2.0);
    dp.R = static_cast<int>(ctx.cfg.get_int("r", 3));
    dp.n = static_cast<int>(ctx.cfg.get_int("n", 2));
    dp.m = static_cast<int>(ctx.cfg.get_int("m", 3));
    holosim::LRParams lr;
    lr.k = static_cast<int>(ctx.cfg.get_int("lr_k", 1));
    lr.s = ctx.cfg.get_real("lr_s", 1.0);
    lr.mu = ctx.cfg.get_real("lr_mu", 1.0);

    json inputs;
    inputs["tau"] = dp.tau;
    inputs["r"] = dp.R;
    inputs["n"] = dp.n;
    inputs["m"] = dp.m;
    inputs["lr_k"] = lr.k;
    inputs["lr_s"] = lr.s;
    inputs["lr_mu"] = lr.mu;

    json outputs;
    auto times = holosim::transit_times(dp);
    outputs["t1"] = times.t1;
    outputs["t2"] = times.t2;
    outputs["ratio"] = times.ratio;
    outputs["lr_velocity"] = holosim::lr_velocity(lr);

    json layers = json::array();
    auto schedule = holosim::norm_schedule(dp);
    auto profile_v = holosim::bulk_lr_profile(schedule);
    for (int x = 0; x <= dp.R; ++x) {
        json row;
        row["layer"] = x;
        row["radius"] = holosim::layer_radius(x, dp.tau, dp.n);
        row["dilation"] = holosim::dilation_factor(x, dp);
        row["dilation_exact"] = holosim::dilation_factor(x, dp, true);
        row["v_bulk"] = profile_v[x];
        layers.push_back(row);
    }
    outputs["layers"] = layers;

    holosim::TessellationSpec spec;
    spec.R = dp.R;
    spec.n = dp.n;
    spec.m = dp.m;
    spec.dense_limit = ctx.dense_limit;
    auto net = holosim::build_tessellation(spec);
    auto canonical = holosim::butterfly_profile(net, schedule);
    auto uniform = holosim::butterfly_profile(net, holosim::uniform_schedule(dp.R));
    write_file(ctx.out_dir / "cone_canonical.csv", cone_csv(canonical));
    write_file(ctx.out_dir / "cone_uniform.csv", cone_csv(uniform));
    outputs["cone_files"] = {"cone_canonical.csv", "cone_uniform.csv"};
    outputs["need"] = canonical.need;

    double sum = 0, sum2 = 0;
    for (const auto& row : canonical.rows) {
        sum += row.velocity;
        sum2 += row.velocity * row.velocity;
    }
    double mean = sum / canonical.rows.size();
    outputs["velocity_mean"] = mean;
    outputs["velocity_cov"] = std::sqrt(sum2 / canonical.rows.size() - mean * mean) / mean;
    write_report(ctx, "causal-check", inputs, outputs, started);
}

holosim::MatrixC pauli_matrix(const std::string& name) {
    holosim::MatrixC m(2, 2);
    if (name == "I")
        m << 1, 0, 0, 1;
    else if (name == "X")
        m << 0, 1, 1, 0;
    else if (name == "Y")
        m << 0, holosim::complexd(0, -1), holosim::complexd(0, 1), 0;
    else if (name == "Z")
        m << 1, 0, 0, -1;
    else
        throw holosim::config_error("unknown Pauli label '" + name + "'");
    return m;
}

void run_verify_gadget(const RunContext& ctx) {
    auto started = std::chrono::steady_clock::now();
    std::string pa = ctx.cfg.get_string("pauli_a", "X");
    std::string pb = ctx.cfg.get_string("pauli_b", "Z");
    double delta0 = ctx.cfg.get_real("delta0", 0.01);
    double heavy = ctx.cfg.get_real("heavy", 1e5);
    int p = static_cast<int>(ctx.cfg.get_int("p", 3));
    double eps = ctx.cfg.get_real("eps", 1e-3);
    double eta = ctx.cfg.get_real("eta", 1e-3);
    double beta = ctx.cfg.get_real("beta", 1.0);
    double t = ctx.cfg.get_real("t", 1.0);

    json inputs;
    inputs["pauli_a"] = pa;
    inputs["pauli_b"] = pb;
    inputs["delta0"] = delta0;
    inputs["heavy"] = heavy;
    inputs["p"] = p;
    inputs["eps"] = eps;
    inputs["eta"] = eta;
    inputs["beta"] = beta;
    inputs["t"] = t;

    auto g = holosim::build_subdivision_gadget(pauli_matrix(pa), pauli_matrix(pb), delta0, heavy,
                                               p);
    auto cert = holosim::verify_second_order(g, eps, eta);

    json outputs;
    outputs["delta0"] = delta0;
    outputs["Delta"] = heavy;
    outputs["p"] = p;
    outputs["residual"] = holosim::second_order_residual(g);
    outputs["measured_eps"] = cert.cert.eps;
    outputs["measured_eta"] = cert.cert.eta;
    outputs["cutoff"] = cert.cert.delta;
    outputs["lambda"] = cert.lambda;
    outputs["heavy_ok"] = cert.heavy_ok;

    // five-decade sweep anchored at the configured heavy norm
    json sweep = json::array();
    double lx[5], ly[5];
    for (int k = 0; k < 5; ++k) {
        double h = heavy * std::pow(10.0, k - 2);
        auto gk = holosim::build_subdivision_gadget(g.p_a, g.p_b, delta0, h, p);
        auto ck = holosim::verify_second_order(gk, eps, eta);
        json row;
        row["heavy"] = h;
        row["eps"] = ck.cert.eps;
        row["eta"] = ck.cert.eta;
        sweep.push_back(row);
        lx[k] = std::log(h);
        ly[k] = std::log(ck.cert.eps);
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int k = 0; k < 5; ++k) {
        sx += lx[k];
        sy += ly[k];
        sxx += lx[k] * lx[k];
        sxy += lx[k] * ly[k];
    }
    outputs["sweep"] = sweep;
    outputs["slope"] = (5 * sxy - sx * sy) / (5 * sxx - sx * sx);

    auto enc_dim = g.target.rows();
    holosim::MatrixC encoded = holosim::apply_encoding(
        holosim::identity_encoding(static_cast<int>(enc_dim)), g.target);
    outputs["target_norm"] = holosim::operator_norm(encoded);

    auto full = holosim::gadget_hamiltonian(g);
    // rho supported on the verified low-energy subspace: the normalized
    // encoding range projector
    holosim::EncodingData enc;
    {
        holosim::MatrixC embed = holosim::MatrixC::Zero(enc_dim * p, enc_dim);
        for (long long i = 0; i < enc_dim; ++i) embed(i * p, i) = 1;
        holosim::MatrixC pP(1, 1), pQ(1, 1);
        pP << 1;
        pQ << 0;
        enc = holosim::make_encoding(embed, pP, pQ);
    }
    holosim::MatrixC rho = enc.V * enc.V.adjoint();
    rho /= rho.trace().real();
    auto phys = holosim::physical_property_checks(full, g.target, cert.cert, enc, beta, t, rho);
    json pj;
    pj["pairing_ok"] = phys.pairing_ok;
    pj["pairing_max_dev"] = phys.pairing_max_dev;
    pj["partition_ok"] = phys.partition_ok;
    pj["dynamics_ok"] = phys.dynamics_ok;
    pj["dynamics_dev"] = phys.dynamics_dev;
    pj["dynamics_bound"] = phys.dynamics_bound;
    outputs["physical"] = pj;

    double norm_c = holosim::operator_norm(g.target);
    auto composed = holosim::concat_certificates(cert.cert, cert.cert, norm_c);
    json cj;
    cj["eps"] = composed.eps;
    cj["eta"] = composed.eta;
    cj["delta"] = composed.delta;
    outputs["composed"] = cj;
    write_report(ctx, "verify-gadget", inputs, outputs, started);
}

void run_recursion_report(const RunContext& ctx) {
    auto started = std::chrono::steady_clock::now();
    holosim::RecursionSchedule s;
    s.delta0 = ctx.cfg.get_real("delta0", s.delta0);
    s.rounds = static_cast<int>(ctx.cfg.get_int("rounds", s.rounds));
    s.tau = ctx.cfg.get_real("tau", s.tau);
    s.R = static_cast<int>(ctx.cfg.get_int("r", s.R));
    s.n = static_cast<int>(ctx.cfg.get_int("n", s.n));
    s.b = ctx.cfg.get_real("b", s.b);

    json inputs;
    inputs["delta0"] = s.delta0;
    inputs["rounds"] = s.rounds;
    inputs["tau"] = s.tau;
    inputs["r"] = s.R;
    inputs["n"] = s.n;
    inputs["b"] = s.b;

    auto rep = holosim::recursion_report(s);
    json outputs;
    json rows = json::array();
    std::string csv = "round,log_tau_ht,log_tau_eps,log_tau_eta\n";
    char line[160];
    for (const auto& r : rep.rows) {
        json row;
        row["round"] = r.round;
        row["log_tau_ht"] = r.log_tau_ht;
        row["log_tau_eps"] = r.log_tau_eps;
        row["log_tau_eta"] = r.log_tau_eta;
        rows.push_back(row);
        std::snprintf(line, sizeof(line), "%d,%.12g,%.12g,%.12g\n", r.round, r.log_tau_ht,
                      r.log_tau_eps, r.log_tau_eta);
        csv += line;
    }
    outputs["rows"] = rows;
    write_file(ctx.out_dir / "recursion.csv", csv);
    outputs["csv_file"] = "recursion.csv";
    outputs["eps"] = log_json(rep.eps);
    outputs["eta"] = log_json(rep.eta);
    outputs["delta1"] = log_json(rep.delta1);
    outputs["delta"] = log_json(rep.delta);
    outputs["log_tau_hsim"] = rep.log_tau_hsim;
    outputs["identity_ok"] = rep.identity_ok;
    outputs["flag"] = rep.flag;

    json ladder = json::array();
    for (int x = 1; x <= 6; ++x) {
        auto pair = holosim::delta_sequence(x, s.delta0);
        json row;
        row["x"] = x;
        row["recursive"] = pair.first;
        row["closed_form"] = pair.second;
        ladder.push_back(row);
    }
    outputs["delta_ladder"] = ladder;
    outputs["ladder_exact_to_30"] = holosim::delta_exact_match(30);
    outputs["identity_exact_to_30"] = holosim::delta_identity_holds(30);
    outputs["budget"] = log_json(holosim::perturbative_budget(s.tau, s.n, s.R).bound);
    write_report(ctx, "recursion-report", inputs, outputs, started);
}

void run_budget_history(const RunContext& ctx) {
    auto started = std::chrono::steady_clock::now();
    int n = static_cast<int>(ctx.cfg.get_int("n", 16));
    double tau = ctx.cfg.get_real("tau", 2.0);
    int R = static_cast<int>(ctx.cfg.get_int("r", 4));
    double lambda = ctx.cfg.get_real("lambda", 9.0);
    double delta_target = ctx.cfg.get_real("delta_target", 1.0);
    double eta_target = ctx.cfg.get_real("eta_target", 0.1);
    double eps_target = ctx.cfg.get_real("eps_target", 0.1);

    json inputs;
    inputs["n"] = n;
    inputs["tau"] = tau;
    inputs["r"] = R;
    inputs["lambda"] = lambda;
    inputs["delta_target"] = delta_target;
    inputs["eta_target"] = eta_target;
    inputs["eps_target"] = eps_target;

    holosim::QPEParams qp;
    qp.sparsity = holosim::pow_of(4.0, n);
    qp.spins = holosim::LogScaled::from_value(n * std::pow(tau, R));
    qp.h_norm = holosim::LogScaled::from_value(1.0);
    qp.accuracy = holosim::LogScaled::from_value(1.0);
    auto rt = holosim::qpe_runtime(qp);

    json outputs;
    outputs["t_u"] = log_json(rt.t_u);
    outputs["t_pe"] = log_json(rt.t_pe);
    outputs["log4_scale"] = rt.log4_scale;
    outputs["coarse_accuracy"] = rt.coarse_accuracy;
    outputs["small_log"] = rt.small_log;

    holosim::HistoryStateModel model;
    model.t_pe = rt.t_pe;
    model.lambda = lambda;
    auto steps = rt.t_pe * holosim::LogScaled::from_value(1.0 + lambda);
    auto j_req = holosim::required_heavy_norm_j(
        holosim::LogScaled::from_value(delta_target), steps, qp.h_norm,
        holosim::LogScaled::from_value(eta_target), holosim::LogScaled::from_value(eps_target));
    model.j = j_req;
    auto errs = holosim::history_state_errors(model, qp.h_norm, qp.accuracy);
    outputs["required_j"] = log_json(j_req);
    outputs["total_steps"] = log_json(errs.total_steps);
    outputs["eta"] = log_json(errs.eta);
    outputs["eps"] = log_json(errs.eps);
    outputs["delta"] = log_json(errs.delta);

    // feeding the required norm back must land at or below the targets
    auto t3 = steps * steps * steps;
    auto t4 = t3 * steps;
    auto swap_eta = t3 * qp.h_norm / j_req;
    auto swap_eps = t4 * qp.h_norm * qp.h_norm / j_req;
    bool eta_ok =
        !holosim::LogScaled::from_value(eta_target * 1.0001).same_sign_less(swap_eta);
    bool eps_ok =
        !holosim::LogScaled::from_value(eps_target * 1.0001).same_sign_less(swap_eps);
    outputs["fixed_point_ok"] = eta_ok && eps_ok;

    auto exps = holosim::sparse_history_exponents();
    json ej;
    auto frac = [](const boost::rational<long long>& r) {
        return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
    };
    ej["a"] = frac(exps.a);
    ej["b"] = frac(exps.b);
    ej["x"] = frac(exps.x);
    ej["y"] = frac(exps.y);
    ej["z"] = frac(exps.z);
    ej["a_plus_2b"] = frac(exps.sum_ab);
    ej["x_plus_2y_plus_z"] = frac(exps.sum_xyz);
    auto vg = holosim::very_good_check(exps.tuple);
    ej["very_good"] = vg.good;
    ej["slack_ab"] = vg.slack_ab;
    ej["slack_xyz"] = vg.slack_xyz;
    outputs["sparse_exponents"] = ej;
    write_report(ctx, "budget-history", inputs, outputs, started);
}

void run_budget_attack(const RunContext& ctx) {
    auto started = std::chrono::steady_clock::now();
    int n = static_cast<int>(ctx.cfg.get_int("n", 8));
    double tau = ctx.cfg.get_real("tau", 2.0);
    int R = static_cast<int>(ctx.cfg.get_int("r", 4));
    holosim::ExponentTuple tuple = holosim::sparse_history_exponents().tuple;
    tuple.a = ctx.cfg.get_real("a", tuple.a);
    tuple.b = ctx.cfg.get_real("b", tuple.b);
    tuple.x = ctx.cfg.get_real("x", tuple.x);
    tuple.y = ctx.cfg.get_real("y", tuple.y);
    tuple.z = ctx.cfg.get_real("z", tuple.z);

    json inputs;
    inputs["n"] = n;
    inputs["tau"] = tau;
    inputs["r"] = R;
    inputs["a"] = tuple.a;
    inputs["b"] = tuple.b;
    inputs["x"] = tuple.x;
    inputs["y"] = tuple.y;
    inputs["z"] = tuple.z;

    auto schedule = holosim::canonical_attack_schedule(n, tau, R);
    auto budget = holosim::attack_error_budget(schedule);
    json outputs;
    outputs["swap_in"] = budget.swap_in;
    outputs["swap_out"] = budget.swap_out;
    outputs["central"] = budget.central;
    outputs["total"] = budget.total;
    outputs["n_times_swap"] = n * (budget.swap_in + budget.swap_out);
    outputs["uniform_bound"] = 6.0 * tau / (tau - 1.0);

    std::string csv = "direction,round,eps,eta,t,term\n";
    char line[192];
    auto emit = [&](const char* dir, const std::vector<holosim::AttackRound>& rounds) {
        for (std::size_t r = 0; r < rounds.size(); ++r) {
            const auto& a = rounds[r];
            std::snprintf(line, sizeof(line), "%s,%zu,%.12g,%.12g,%.12g,%.12g\n", dir, r, a.eps,
                          a.eta, a.t, 2 * a.eps * a.t + a.eta);
            csv += line;
        }
    };
    emit("in", schedule.inbound);
    emit("out", schedule.outbound);
    std::snprintf(line, sizeof(line), "central,0,%.12g,%.12g,%.12g,%.12g\n", schedule.central.eps,
                  schedule.central.eta, schedule.central.t,
                  2 * schedule.central.eps * schedule.central.t + schedule.central.eta);
    csv += line;
    write_file(ctx.out_dir / "attack.csv", csv);
    outputs["csv_file"] = "attack.csv";

    json strengths = json::array();
    for (int r = 0; r <= R; ++r) {
        auto e = holosim::attack_norm_exponent(tuple, r, n, tau, R);
        json row;
        row["round"] = r;
        row["ab"] = log_json(e.ab);
        row["xyz"] = log_json(e.xyz);
        strengths.push_back(row);
    }
    outputs["strengths"] = strengths;
    write_report(ctx, "budget-attack", inputs, outputs, started);
}

void run_causality_probe(const RunContext& ctx) {
    auto started = std::chrono::steady_clock::now();
    int l_min = static_cast<int>(ctx.cfg.get_int("l_min", 2));
    int l_max = static_cast<int>(ctx.cfg.get_int("l_max", 8));
    double eps = ctx.cfg.get_real("eps", 0.45);
    double scan_cap = ctx.cfg.get_real("scan_cap", 16.0);
    if (l_min < 2 || l_max < l_min)
        throw holosim::config_error("need 2 <= l_min <= l_max");

    json inputs;
    inputs["l_min"] = l_min;
    inputs["l_max"] = l_max;
    inputs["eps"] = eps;
    inputs["scan_cap"] = scan_cap;
    inputs["seed"] = ctx.seed;

    holosim::VectorC one(2), plus(2), plus_i(2);
    one << 0, 1;
    plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    plus_i << 1 / std::sqrt(2.0), holosim::complexd(0, 1 / std::sqrt(2.0));
    const holosim::VectorC probes[] = {one, plus, plus_i};

    json outputs;
    json stars = json::array();
    for (int L = l_min; L <= l_max; ++L) {
        auto r = holosim::min_coupling_search(L, eps);
        json row;
        row["sites"] = L;
        row["found"] = r.found;
        if (r.found) {
            row["tau_star"] = r.coupling;
            row["infidelity"] = r.infidelity;
        }
        stars.push_back(row);
    }
    outputs["tau_star"] = stars;

    std::string csv = "L,tau,exact_infidelity,heuristic_error\n";
    char line[160];
    for (int L = l_min; L <= l_max; ++L) {
        for (double tau = 0.5; tau <= scan_cap; tau *= 1.01) {
            holosim::ChainSpec spec;
            spec.sites = L;
            spec.coupling = tau;
            double worst = 0;
            for (const auto& psi : probes)
                worst = std::max(worst, 1.0 - holosim::chain_transfer_fidelity(
                                                  spec, psi, std::numbers::pi / 2)
                                                  .fidelity);
            std::snprintf(line, sizeof(line), "%d,%.12g,%.12g,%.12g\n", L, tau, worst,
                          holosim::heuristic_chain_error(L - 1, tau));
            csv += line;
        }
    }
    write_file(ctx.out_dir / "scan.csv", csv);
    outputs["csv_file"] = "scan.csv";

    // closed-form regression of the single-link evolution on random states
    std::mt19937 rng(static_cast<unsigned>(ctx.seed));
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    double worst_dev = 0;
    for (int trial = 0; trial < 100; ++trial) {
        double theta = angle(rng) / 2, phi = angle(rng), t = angle(rng);
        holosim::VectorC psi(2);
        psi << std::cos(theta),
            std::polar(std::sin(theta), phi);
        auto evolved = holosim::swap_exact_evolution(psi, t);
        holosim::VectorC zero(2), closed(4);
        zero << 1, 0;
        closed = std::cos(t) * holosim::kron_vec(psi, zero) -
                 holosim::complexd(0, 1) * std::sin(t) * holosim::kron_vec(zero, psi);
        worst_dev = std::max(worst_dev, (evolved - closed).cwiseAbs().maxCoeff());
    }
    outputs["swap_closed_form_dev"] = worst_dev;
    write_report(ctx, "causality-probe", inputs, outputs, started);
}

void run_scenario(const RunContext& ctx) {
    auto started = std::chrono::steady_clock::now();
    holosim::ScenarioParams p;
    std::string kind = ctx.cfg.get_string("kind", "general");
    if (kind == "general")
        p.kind = holosim::ScenarioKind::general;
    else if (kind == "k_local")
        p.kind = holosim::ScenarioKind::k_local;
    else
        throw holosim::config_error("kind must be general or k_local");
    p.n = static_cast<int>(ctx.cfg.get_int("n", p.n));
    p.R = static_cast<int>(ctx.cfg.get_int("r", p.R));
    p.tau = ctx.cfg.get_real("tau", p.tau);
    p.alpha = ctx.cfg.get_real("alpha", p.alpha);
    p.beta = ctx.cfg.get_real("beta", p.alpha);
    p.alpha_loc = ctx.cfg.get_real("alpha_loc", p.alpha_loc);
    p.beta_loc = ctx.cfg.get_real("beta_loc", p.alpha_loc);
    p.k = static_cast<int>(ctx.cfg.get_int("k", p.k));

    json inputs;
    inputs["kind"] = kind;
    inputs["n"] = p.n;
    inputs["r"] = p.R;
    inputs["tau"] = p.tau;
    inputs["alpha"] = p.alpha;
    inputs["beta"] = p.beta;
    inputs["alpha_loc"] = p.alpha_loc;
    inputs["beta_loc"] = p.beta_loc;
    inputs["k"] = p.k;

    auto rep = holosim::scenario_report(p);
    json outputs;
    outputs["inputs"] = inputs;
    outputs["log_eta"] = rep.ln_eta;
    outputs["log_eps"] = rep.ln_eps;
    outputs["log_delta"] = rep.ln_delta;
    outputs["log_budget"] = rep.ln_budget;
    outputs["log_final"] = rep.ln_final;
    outputs["log_h_norm"] = rep.ln_h_norm;
    outputs["log_tpe"] = rep.ln_tpe;
    outputs["eta_dominates"] = rep.eta_dominates;
    outputs["good"] = rep.good;
    write_report(ctx, "scenario", inputs, outputs, started);
}

// command -> module operations it drives; the roster below must be fully
// covered or the hidden op-coverage report (and its test) flags the gap.
const std::map<std::string, std::vector<std::string>>& coverage_table() {
    static const std::map<std::string, std::vector<std::string>> table = {
        {"build-network",
         {"build_tessellation", "measure_growth_rate", "make_perfect_tensor",
          "check_perfect_isometry", "contract_to_boundary_state", "bulk_to_boundary_isometry"}},
        {"entropy-bounds",
         {"build_tessellation", "min_cut", "greedy_geodesic", "entropy_bounds",
          "contract_to_boundary_state", "exact_region_entropy"}},
        {"mi-budget",
         {"build_tessellation", "mutual_info_budget", "min_cut", "qpv_total_entanglement"}},
        {"causal-check",
         {"layer_radius", "dilation_factor", "norm_schedule", "transit_times", "lr_velocity",
          "bulk_lr_profile", "butterfly_profile", "build_tessellation"}},
        {"verify-gadget",
         {"build_subdivision_gadget", "second_order_residual", "verify_second_order",
          "verify_simulation", "apply_encoding", "physical_property_checks",
          "concat_certificates"}},
        {"recursion-report", {"delta_sequence", "recursion_report", "perturbative_budget"}},
        {"budget-history",
         {"qpe_runtime", "history_state_errors", "required_heavy_norm_J", "very_good_check"}},
        {"budget-attack", {"attack_error_budget", "attack_norm_exponent"}},
        {"causality-probe",
         {"swap_exact_evolution", "chain_transfer_fidelity", "min_coupling_search",
          "heuristic_chain_error"}},
        {"scenario", {"scenario_report", "qpe_runtime"}},
    };
    return table;
}

const std::vector<std::string>& operation_roster() {
    static const std::vector<std::string> roster = {
        "build_tessellation", "measure_growth_rate", "make_perfect_tensor",
        "check_perfect_isometry", "contract_to_boundary_state", "bulk_to_boundary_isometry",
        "min_cut", "greedy_geodesic", "entropy_bounds", "exact_region_entropy",
        "mutual_info_budget", "qpv_total_entanglement", "layer_radius", "dilation_factor",
        "norm_schedule", "transit_times", "lr_velocity", "bulk_lr_profile", "butterfly_profile",
        "apply_encoding", "verify_simulation", "physical_property_checks", "concat_certificates",
        "very_good_check", "build_subdivision_gadget", "second_order_residual",
        "verify_second_order", "delta_sequence", "recursion_report", "perturbative_budget",
        "qpe_runtime", "history_state_errors", "required_heavy_norm_J", "scenario_report",
        "attack_error_budget", "attack_norm_exponent", "swap_exact_evolution",
        "chain_transfer_fidelity", "min_coupling_search", "heuristic_chain_error"};
    return roster;
}

void run_op_coverage() {
    json j;
    json commands;
    std::map<std::string, bool> seen;
    for (const auto& [cmd, ops] : coverage_table()) {
        commands[cmd] = ops;
        for (const auto& op : ops) seen[op] = true;
    }
    j["commands"] = commands;
    j["operations"] = operation_roster();
    json uncovered = json::array();
    for (const auto& op : operation_roster())
        if (!seen.count(op)) uncovered.push_back(op);
    j["uncovered"] = uncovered;
    std::cout << j.dump(2) << "\n";
}

int error_exit_code(const holosim::error& e) {
    const std::string& t = e.type();
    if (t == "config") return 2;
    if (t == "invalid_argument") return 3;
    if (t == "size_limit") return 4;
    if (t == "unsupported") return 5;
    if (t == "structural_mismatch") return 6;
    if (t == "ill_conditioned") return 7;
    if (t == "not_found") return 8;
    return 1;
}

void print_error(const std::string& type, const std::string& message) {
    json j;
    j["error"]["type"] = type;
    j["error"]["message"] = message;
    std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"holographic simulation-budget toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(0, 1);

    std::string config_path;
    std::string out_dir = ".";
    long seed = 0;
    int dense_limit = 20;
    app.add_option("--config", config_path, "key = value parameter file");
    app.add_option("--out", out_dir, "report directory");
    app.add_option("--seed", seed, "deterministic RNG seed");
    app.add_option("--dense-limit", dense_limit, "max qubits for dense work");

    const std::map<std::string, void (*)(const RunContext&)> handlers = {
        {"build-network", run_build_network},   {"entropy-bounds", run_entropy_bounds},
        {"mi-budget", run_mi_budget},           {"causal-check", run_causal_check},
        {"verify-gadget", run_verify_gadget},   {"recursion-report", run_recursion_report},
        {"budget-history", run_budget_history}, {"budget-attack", run_budget_attack},
        {"causality-probe", run_causality_probe}, {"scenario", run_scenario},
    };
    for (const auto& [name, fn] : handlers) {
        (void)fn;
        app.add_subcommand(name, "")->fallthrough();  // global flags may follow the command
    }
    auto* coverage = app.add_subcommand("op-coverage", "");
    coverage->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("usage", e.what());
        return 2;
    }

    if (coverage->parsed()) {
        run_op_coverage();
        return 0;
    }
    auto picked = app.get_subcommands();
    if (picked.empty()) {
        print_error("usage", "missing command; see --help");
        return 2;
    }

    try {
        RunContext ctx;
        if (!config_path.empty()) ctx.cfg = Config::parse_file(config_path);
        if (ctx.cfg.has("dense_limit") && dense_limit == 20)
            dense_limit = static_cast<int>(ctx.cfg.get_int("dense_limit"));
        ctx.out_dir = out_dir;
        ctx.seed = seed;
        ctx.dense_limit = dense_limit;
        std::filesystem::create_directories(ctx.out_dir);
        handlers.at(picked.front()->get_name())(ctx);
        return 0;
    } catch (const holosim::error& e) {
        print_error(e.type(), e.what());
        return error_exit_code(e);
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return 1;
    }
}
