#include "holosim/dense.hpp"

#include "holosim/errors.hpp"

namespace holosim {

MatrixC kron(const MatrixC& a, const MatrixC& b) {
    MatrixC r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

VectorC kron_vec(const VectorC& a, const VectorC& b) {
    VectorC r(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        r.segment(i * b.size(), b.size()) = a(i) * b;
    return r;
}

bool is_hermitian(const MatrixC& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double operator_norm(const MatrixC& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<MatrixC> svd(m);
    return svd.singularValues()(0);
}

double hermitian_norm(const MatrixC& m) {
    if (m.size() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<MatrixC> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

double trace_norm(const MatrixC& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<MatrixC> svd(m);
    return svd.singularValues().sum();
}

MatrixC evolution_operator(const MatrixC& h, double t) {
    if (!is_hermitian(h)) throw invalid_argument_error("evolution_operator needs Hermitian input");
    Eigen::SelfAdjointEigenSolver<MatrixC> es(h);
    VectorC phases(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); ++i)
        phases(i) = std::exp(complexd(0.0, -es.eigenvalues()(i) * t));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace holosim
