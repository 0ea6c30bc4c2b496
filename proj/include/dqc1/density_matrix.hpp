#pragma once

#include <Eigen/Dense>
#include <complex>

#include "dqc1/errors.hpp"

namespace dqc1 {

enum class PauliAxis { X, Y, Z };

/// 2x2 polarization state in the {H, V} basis. Construction checks
/// Hermiticity, unit trace (1e-12) and positive semidefiniteness (-1e-12).
class PolarizationDensityMatrix {
 public:
  static PolarizationDensityMatrix from_matrix(const Eigen::Matrix2cd& m);

  const Eigen::Matrix2cd& matrix() const { return m_; }
  std::complex<double> hh() const { return m_(0, 0); }
  std::complex<double> hv() const { return m_(0, 1); }
  std::complex<double> vh() const { return m_(1, 0); }
  std::complex<double> vv() const { return m_(1, 1); }

 private:
  explicit PolarizationDensityMatrix(const Eigen::Matrix2cd& m) : m_(m) {}
  Eigen::Matrix2cd m_;
};

Eigen::Matrix2cd pauli_matrix(PauliAxis axis);

/// Tr(rho * sigma_axis). Real by Hermiticity.
double expectation(const PolarizationDensityMatrix& rho, PauliAxis axis);

}  // namespace dqc1
