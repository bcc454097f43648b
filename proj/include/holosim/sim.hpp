#pragma once

#include "holosim/dense.hpp"

#include <iosfwd>
#include <string>

namespace holosim {

// Local encoding E(M) = V (M (x) P + conj(M) (x) Q) V^dag. P + Q must
// resolve the ancilla identity so the low-energy dimension equals
// dim(target) * (rank P + rank Q) and the isometry distance is well defined.
struct EncodingData {
    MatrixC V;
    MatrixC P;
    MatrixC Q;
    int rank_p = 0;
    int rank_q = 0;
};

EncodingData make_encoding(MatrixC V, MatrixC P, MatrixC Q);
EncodingData identity_encoding(int dim);

MatrixC apply_encoding(const EncodingData& enc, const MatrixC& M);

struct SimulationCertificate {
    double delta = 0;
    double eta = 0;
    double eps = 0;
    bool measured = false;
};

SimulationCertificate verify_simulation(const MatrixC& h_sim, const MatrixC& h_target,
                                        const EncodingData& enc, double delta);

struct PhysicalReport {
    double pairing_max_dev = 0;
    bool pairing_ok = false;
    double partition_lhs = 0;
    double partition_rhs = 0;
    bool partition_ok = false;
    double dynamics_dev = 0;
    double dynamics_bound = 0;
    bool dynamics_ok = false;
};

PhysicalReport physical_property_checks(const MatrixC& h_sim, const MatrixC& h_target,
                                        const SimulationCertificate& cert,
                                        const EncodingData& enc, double beta, double t,
                                        const MatrixC& rho_enc);

SimulationCertificate concat_certificates(const SimulationCertificate& outer,
                                          const SimulationCertificate& inner, double norm_c);

struct ExponentTuple {
    double a = 0;
    double b = 0;
    double x = 0;
    double y = 0;
    double z = 0;
    double locality = 1;
    double target_norm = 1;
};

struct VeryGoodReport {
    bool good = false;
    double slack_ab = 0;   // 1 - (a + 2b)
    double slack_xyz = 0;  // 1 - (x + 2y + z)
};

VeryGoodReport very_good_check(const ExponentTuple& e);

MatrixC read_hermitian_text(std::istream& in);
MatrixC read_hermitian_file(const std::string& path);
void write_hermitian_text(std::ostream& out, const MatrixC& M);

}  // namespace holosim
