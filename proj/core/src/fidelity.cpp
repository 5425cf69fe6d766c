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

#include "cvbroadcast/fidelity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cvbroadcast/cloning.hpp"
#include "cvbroadcast/optics.hpp"

namespace cvb {
namespace {

double det(const Matrix& m) {
  if (m.rows() == 2) return Eigen::Matrix2d(m).determinant();
  return Eigen::Matrix4d(m).determinant();
}

double fidelity_from(double det_sum, double delta) {
  return 1.0 / (std::sqrt(det_sum + delta) - std::sqrt(delta));
}

}  // namespace

FidelityReport gaussian_fidelity(const CovarianceMatrix& in, const CovarianceMatrix& out) {
  if (in.n_modes() != out.n_modes()) {
    throw std::invalid_argument("gaussian_fidelity: mode counts differ (" + std::to_string(in.n_modes()) + " vs " +
                                std::to_string(out.n_modes()) + ")");
  }
  if (in.n_modes() > 2) throw std::invalid_argument("gaussian_fidelity: only 1- and 2-mode states are supported");
  for (const auto* sigma : {&in, &out}) {
    const auto phys = is_physical(*sigma);
    if (!phys.physical) {
      throw std::invalid_argument("gaussian_fidelity: non-physical state (margin " + std::to_string(phys.margin) +
                                  ")");
    }
  }
  const double det_sum = det(in.entries() + out.entries());
  const double delta = 4.0 * (det(in.entries()) - 0.25) * (det(out.entries()) - 0.25);
  return {fidelity_from(det_sum, delta), det_sum, delta};
}

double clone_fidelity_closed(double r, double phi) {
  const auto [p_var, m_var] = clone_variances_closed(r, phi);
  const double delta = 3.0 * (p_var * m_var - 0.25);
  return fidelity_from((p_var + std::exp(2.0 * r)) * (m_var + std::exp(-2.0 * r)), delta);
}

double clone_fidelity_phi0(double r) {
  const double c = SqueezeParams(r).c();
  return 2.0 / (std::sqrt(8.0 * c * c + 12.0 * c + 5.0) - std::sqrt(3.0 + 6.0 * c));
}

}  // namespace cvb
