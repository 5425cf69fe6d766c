// Copyright 2026 The cvbroadcast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Symplectic spectrum of two-mode covariance matrices.
// Shared by the physicality test and the separability module.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cmath>
#include <stdexcept>

namespace cvb::detail {

/// Relative band inside which a negative discriminant is treated as zero.
inline constexpr double kDiscriminantTolerance = 1e-10;

struct SpectrumSquared {
  double minus;
  double plus;
};

struct Spectrum {
  double minus;
  double plus;
};

inline Eigen::Matrix4d two_mode_form() {
  Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
  j(0, 1) = j(2, 3) = 1.0;
  j(1, 0) = j(3, 2) = -1.0;
  return j;
}

/// Invariant closed form: nu_pm^2 = (Delta +- sqrt(Delta^2 - 4 det sigma)) / 2
/// with Delta = det A + det B + 2 det C for sigma = [[A, C], [C^T, B]].
/// Loses accuracy for strongly squeezed inputs, where Delta and det sigma
/// are many orders larger than nu_minus^2.
inline SpectrumSquared two_mode_spectrum_squared_closed(const Eigen::Matrix4d& sigma) {
  const Eigen::Matrix2d a = sigma.block<2, 2>(0, 0);
  const Eigen::Matrix2d b = sigma.block<2, 2>(2, 2);
  const Eigen::Matrix2d c = sigma.block<2, 2>(0, 2);
  const double delta = a.determinant() + b.determinant() + 2.0 * c.determinant();
  double disc = delta * delta - 4.0 * sigma.determinant();
  if (disc < 0.0) {
    if (disc < -kDiscriminantTolerance * std::max(1.0, delta * delta)) {
      throw std::domain_error("negative symplectic discriminant: input is not a physical covariance matrix");
    }
    disc = 0.0;
  }
  return {0.5 * (delta - std::sqrt(disc)), 0.5 * (delta + std::sqrt(disc))};
}

/// Williamson route: with sigma = L L^T, the Hermitian matrix L^T (iJ) L has
/// eigenvalues -nu_plus, -nu_minus, nu_minus, nu_plus. Errors stay at the
/// level of eps * max|sigma| even when nu_plus >> nu_minus. Throws
/// std::domain_error unless sigma is positive definite.
inline Spectrum two_mode_spectrum(const Eigen::Matrix4d& sigma) {
  const Eigen::LLT<Eigen::Matrix4d> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("covariance matrix is not positive definite");
  }
  const Eigen::Matrix4d l = llt.matrixL();
  const Eigen::Matrix4d k = l.transpose() * two_mode_form() * l;
  const Eigen::Matrix4cd herm = std::complex<double>(0.0, 1.0) * k.cast<std::complex<double>>();
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(herm, Eigen::EigenvaluesOnly);
  const Eigen::Vector4d ev = eig.eigenvalues();
  return {0.5 * (ev(2) - ev(1)), 0.5 * (ev(3) - ev(0))};
}

}  // namespace cvb::detail
