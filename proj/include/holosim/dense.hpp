#pragma once

#include <complex>

#include <Eigen/Dense>

namespace holosim {

using complexd = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;

MatrixC kron(const MatrixC& a, const MatrixC& b);
VectorC kron_vec(const VectorC& a, const VectorC& b);

bool is_hermitian(const MatrixC& m, double tol = 1e-10);

// Operator (Schatten-infinity) norm: largest singular value.
double operator_norm(const MatrixC& m);
// Same, via eigenvalues; requires m Hermitian.
double hermitian_norm(const MatrixC& m);
// Schatten-1 norm: sum of singular values.
double trace_norm(const MatrixC& m);

// e^{-iHt} for Hermitian H, by eigendecomposition.
MatrixC evolution_operator(const MatrixC& h, double t);

}  // namespace holosim
