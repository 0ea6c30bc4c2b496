#include "dqc1/density_matrix.hpp"

namespace dqc1 {

PolarizationDensityMatrix PolarizationDensityMatrix::from_matrix(
    const Eigen::Matrix2cd& m) {
  constexpr double tol = 1e-12;
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw ValidationError("density matrix is not Hermitian");
  if (std::abs(m.trace() - 1.0) > tol)
    throw ValidationError("density matrix trace is not 1");
  const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
  if (det < -tol)
    throw ValidationError("density matrix is not positive semidefinite");
  return PolarizationDensityMatrix(m);
}

Eigen::Matrix2cd pauli_matrix(PauliAxis axis) {
  const std::complex<double> i(0.0, 1.0);
  Eigen::Matrix2cd s;
  switch (axis) {
    case PauliAxis::X: s << 0, 1, 1, 0; break;
    case PauliAxis::Y: s << 0, -i, i, 0; break;
    case PauliAxis::Z: s << 1, 0, 0, -1; break;
  }
  return s;
}

double expectation(const PolarizationDensityMatrix& rho, PauliAxis axis) {
  return (rho.matrix() * pauli_matrix(axis)).trace().real();
}

}  // namespace dqc1
