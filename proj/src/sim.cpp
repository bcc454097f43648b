#include "holosim/sim.hpp"

#include "holosim/errors.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace holosim {
namespace {

constexpr double kStructureTol = 1e-10;

void check_projector(const MatrixC& P, const char* name) {
    if (P.rows() != P.cols()) throw invalid_argument_error(std::string(name) + " must be square");
    if (!is_hermitian(P, kStructureTol))
        throw invalid_argument_error(std::string(name) + " must be Hermitian");
    if ((P * P - P).cwiseAbs().maxCoeff() > kStructureTol)
        throw invalid_argument_error(std::string(name) + " must be idempotent");
}

int projector_rank(const MatrixC& P) {
    return static_cast<int>(std::llround(P.trace().real()));
}

// Spectrum of M (x) P + conj(M) (x) Q: every eigenvalue of M with
// multiplicity rank(P) + rank(Q).
MatrixC encoded_block(const MatrixC& M, const EncodingData& enc) {
    return kron(M, enc.P) + kron(M.conjugate(), enc.Q);
}

}  // namespace

EncodingData make_encoding(MatrixC V, MatrixC P, MatrixC Q) {
    check_projector(P, "P");
    check_projector(Q, "Q");
    if (P.rows() != Q.rows()) throw invalid_argument_error("P and Q act on different spaces");
    if ((P * Q).cwiseAbs().maxCoeff() > kStructureTol)
        throw invalid_argument_error("P and Q must be orthogonal");
    MatrixC sum = P + Q;
    if ((sum - MatrixC::Identity(P.rows(), P.cols())).cwiseAbs().maxCoeff() > kStructureTol)
        throw invalid_argument_error("P + Q must resolve the ancilla identity");
    MatrixC gram = V.adjoint() * V;
    if ((gram - MatrixC::Identity(V.cols(), V.cols())).cwiseAbs().maxCoeff() > kStructureTol)
        throw invalid_argument_error("V must be an isometry");
    EncodingData enc;
    enc.rank_p = projector_rank(P);
    enc.rank_q = projector_rank(Q);
    enc.V = std::move(V);
    enc.P = std::move(P);
    enc.Q = std::move(Q);
    return enc;
}

EncodingData identity_encoding(int dim) {
    if (dim < 1) throw invalid_argument_error("dimension must be positive");
    MatrixC P = MatrixC::Ones(1, 1);
    MatrixC Q = MatrixC::Zero(1, 1);
    return make_encoding(MatrixC::Identity(dim, dim), std::move(P), std::move(Q));
}

MatrixC apply_encoding(const EncodingData& enc, const MatrixC& M) {
    if (M.rows() != M.cols()) throw invalid_argument_error("encoded operator must be square");
    if (enc.V.cols() != M.rows() * enc.P.rows())
        throw invalid_argument_error("operator dimension incompatible with encoding");
    return enc.V * encoded_block(M, enc) * enc.V.adjoint();
}

SimulationCertificate verify_simulation(const MatrixC& h_sim, const MatrixC& h_target,
                                        const EncodingData& enc, double delta) {
    if (!is_hermitian(h_sim) || !is_hermitian(h_target))
        throw invalid_argument_error("Hamiltonians must be Hermitian");
    if (delta <= 0) throw invalid_argument_error("energy cutoff must be positive");

    Eigen::SelfAdjointEigenSolver<MatrixC> es(h_sim);
    const auto& ev = es.eigenvalues();
    int dim_low = 0;
    while (dim_low < ev.size() && ev(dim_low) < delta) ++dim_low;
    if (dim_low > 0 && dim_low < ev.size() && ev(dim_low) - ev(dim_low - 1) <= 1e-8)
        throw ill_conditioned_error("cutoff sits inside a spectral cluster");

    long long want = h_target.rows() * (enc.rank_p + enc.rank_q);
    if (dim_low != want)
        throw structural_mismatch_error("low-energy dimension " + std::to_string(dim_low) +
                                        ", encoding needs " + std::to_string(want));

    MatrixC u_low = es.eigenvectors().leftCols(dim_low);
    // Isometry distance is gauge-sensitive; align the low-energy basis to V
    // by the orthogonal Procrustes rotation before measuring it.
    Eigen::JacobiSVD<MatrixC> svd(u_low.adjoint() * enc.V,
                                  Eigen::ComputeThinU | Eigen::ComputeThinV);
    MatrixC v_tilde = u_low * (svd.matrixU() * svd.matrixV().adjoint());

    MatrixC h_low = u_low * ev.head(dim_low).asDiagonal() * u_low.adjoint();
    MatrixC encoded = v_tilde * encoded_block(h_target, enc) * v_tilde.adjoint();

    SimulationCertificate cert;
    cert.delta = delta;
    cert.eta = operator_norm(v_tilde - enc.V);
    cert.eps = hermitian_norm(h_low - encoded);
    cert.measured = true;
    return cert;
}

PhysicalReport physical_property_checks(const MatrixC& h_sim, const MatrixC& h_target,
                                        const SimulationCertificate& cert,
                                        const EncodingData& enc, double beta, double t,
                                        const MatrixC& rho_enc) {
    MatrixC support = apply_encoding(enc, MatrixC::Identity(h_target.rows(), h_target.cols()));
    if ((support * rho_enc - rho_enc).cwiseAbs().maxCoeff() > 1e-8)
        throw invalid_argument_error("state must live in the encoded subspace");

    Eigen::SelfAdjointEigenSolver<MatrixC> es_sim(h_sim);
    Eigen::SelfAdjointEigenSolver<MatrixC> es_tgt(h_target);
    const auto& lam_sim = es_sim.eigenvalues();
    const auto& lam_tgt = es_tgt.eigenvalues();
    int pq = enc.rank_p + enc.rank_q;
    constexpr double kSlack = 1e-9;

    PhysicalReport rep;
    // Low eigenvalues of the simulator come in blocks of p+q copies of each
    // target eigenvalue, each copy within eps.
    for (int i = 0; i < lam_tgt.size(); ++i)
        for (int j = i * pq; j < (i + 1) * pq; ++j)
            rep.pairing_max_dev = std::max(rep.pairing_max_dev,
                                           std::abs(lam_tgt(i) - lam_sim(j)));
    rep.pairing_ok = rep.pairing_max_dev <= cert.eps + kSlack;

    double z_sim = 0, z_tgt = 0;
    for (int j = 0; j < lam_sim.size(); ++j) z_sim += std::exp(-beta * lam_sim(j));
    for (int i = 0; i < lam_tgt.size(); ++i) z_tgt += std::exp(-beta * lam_tgt(i));
    rep.partition_lhs = std::abs(z_sim - pq * z_tgt) / (pq * z_tgt);
    double norm_tgt = std::max(std::abs(lam_tgt(0)), std::abs(lam_tgt(lam_tgt.size() - 1)));
    rep.partition_rhs = static_cast<double>(lam_sim.size()) * std::exp(-beta * cert.delta) /
                            (pq * lam_tgt.size() * std::exp(-beta * norm_tgt)) +
                        std::expm1(cert.eps * beta);
    rep.partition_ok = rep.partition_lhs <= rep.partition_rhs + kSlack;

    MatrixC u_sim = evolution_operator(h_sim, t);
    MatrixC u_enc = evolution_operator(apply_encoding(enc, h_target), t);
    rep.dynamics_dev = trace_norm(u_sim * rho_enc * u_sim.adjoint() -
                                  u_enc * rho_enc * u_enc.adjoint());
    rep.dynamics_bound = 2.0 * cert.eps * t + 4.0 * cert.eta;
    rep.dynamics_ok = rep.dynamics_dev <= rep.dynamics_bound + kSlack;
    return rep;
}

SimulationCertificate concat_certificates(const SimulationCertificate& outer,
                                          const SimulationCertificate& inner, double norm_c) {
    if (norm_c <= 0) throw invalid_argument_error("interface norm must be positive");
    if (outer.eps > norm_c)
        throw invalid_argument_error("outer spectral error exceeds the interface norm");
    if (inner.eps > norm_c)
        throw invalid_argument_error("inner spectral error exceeds the interface norm");
    double need = norm_c + 2.0 * outer.eps + inner.eps;
    if (inner.delta < need)
        throw invalid_argument_error("inner cutoff below the interface norm plus error margin");
    double denom = inner.delta - norm_c + inner.eps;
    SimulationCertificate cert;
    cert.delta = inner.delta - outer.eps;
    cert.eta = outer.eta + inner.eta + outer.eps / denom;
    cert.eps = outer.eps + inner.eps + outer.eps * norm_c / denom;
    cert.measured = false;
    return cert;
}

VeryGoodReport very_good_check(const ExponentTuple& e) {
    VeryGoodReport rep;
    rep.slack_ab = 1.0 - (e.a + 2.0 * e.b);
    rep.slack_xyz = 1.0 - (e.x + 2.0 * e.y + e.z);
    rep.good = rep.slack_ab >= 0 && rep.slack_xyz >= 0;
    return rep;
}

MatrixC read_hermitian_text(std::istream& in) {
    long long dim = 0;
    if (!(in >> dim) || dim < 1) throw invalid_argument_error("bad matrix dimension header");
    MatrixC M(dim, dim);
    for (long long r = 0; r < dim; ++r)
        for (long long c = 0; c < dim; ++c) {
            std::string entry;
            if (!(in >> entry)) throw invalid_argument_error("truncated matrix data");
            size_t comma = entry.find(',');
            if (comma == std::string::npos)
                throw invalid_argument_error("matrix entries must be re,im pairs");
            try {
                M(r, c) = complexd(std::stod(entry.substr(0, comma)),
                                   std::stod(entry.substr(comma + 1)));
            } catch (const std::exception&) {
                throw invalid_argument_error("unparseable matrix entry '" + entry + "'");
            }
        }
    if (!is_hermitian(M)) throw invalid_argument_error("matrix is not Hermitian");
    return M;
}

MatrixC read_hermitian_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw not_found_error("cannot open " + path);
    return read_hermitian_text(in);
}

void write_hermitian_text(std::ostream& out, const MatrixC& M) {
    out << M.rows() << "\n";
    out.precision(17);
    for (long long r = 0; r < M.rows(); ++r) {
        for (long long c = 0; c < M.cols(); ++c) {
            if (c) out << ' ';
            out << M(r, c).real() << ',' << M(r, c).imag();
        }
        out << "\n";
    }
}

}  // namespace holosim
