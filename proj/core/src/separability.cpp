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

#include "cvbroadcast/separability.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "two_mode_spectrum.hpp"

namespace cvb {
namespace {

void require_two_modes(const CovarianceMatrix& sigma, const char* what) {
  if (sigma.n_modes() != 2) {
    throw std::invalid_argument(std::string(what) + ": expected 2 modes, got " + std::to_string(sigma.n_modes()));
  }
}

}  // namespace

CovarianceMatrix partial_transpose_two_mode(const CovarianceMatrix& sigma, int mode) {
  require_two_modes(sigma, "partial_transpose_two_mode");
  if (mode != 1 && mode != 2) throw std::out_of_range("partial_transpose_two_mode: mode must be 1 or 2");
  const Eigen::Index p_row = 2 * (mode - 1) + 1;
  Matrix m = sigma.entries();
  m.row(p_row) *= -1.0;
  m.col(p_row) *= -1.0;
  return CovarianceMatrix(std::move(m));
}

SymplecticSpectrum symplectic_eigenvalues_two_mode(const CovarianceMatrix& sigma) {
  require_two_modes(sigma, "symplectic_eigenvalues_two_mode");
  const auto nu = detail::two_mode_spectrum(sigma.entries());
  return {nu.minus, nu.plus};
}

SymplecticSpectrum symplectic_eigenvalues_two_mode_closed(const CovarianceMatrix& sigma) {
  require_two_modes(sigma, "symplectic_eigenvalues_two_mode_closed");
  const auto sq = detail::two_mode_spectrum_squared_closed(sigma.entries());
  if (sq.minus < 0.0) throw std::domain_error("symplectic_eigenvalues_two_mode_closed: negative determinant");
  return {std::sqrt(sq.minus), std::sqrt(sq.plus)};
}

SeparabilityVerdict is_separable_two_mode(const CovarianceMatrix& sigma) {
  require_two_modes(sigma, "is_separable_two_mode");
  const PhysicalityCheck phys = is_physical(sigma);
  if (!phys.physical) {
    throw std::invalid_argument("is_separable_two_mode: non-physical input (margin " + std::to_string(phys.margin) +
                                ")");
  }
  const double nu = symplectic_eigenvalues_two_mode(partial_transpose_two_mode(sigma)).nu_minus;
  return {nu < 1.0 - kSeparabilityTolerance, nu, nu - 1.0};
}

}  // namespace cvb
