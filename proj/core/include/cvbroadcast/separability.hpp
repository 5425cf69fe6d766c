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

// Two-mode Gaussian separability via partial transposition.

#include "cvbroadcast/gaussian_core.hpp"

namespace cvb {

/// Threshold band around 1 for the partially transposed spectrum.
inline constexpr double kSeparabilityTolerance = 1e-10;

struct SymplecticSpectrum {
  double nu_minus;
  double nu_plus;
};

struct SeparabilityVerdict {
  bool entangled;
  /// Smaller symplectic eigenvalue of the partial transpose.
  double min_pt_symplectic_eigenvalue;
  /// min_pt_symplectic_eigenvalue - 1.
  double margin;
};

/// Flips the sign of p on `mode` (1 or 2) of a two-mode covariance matrix.
CovarianceMatrix partial_transpose_two_mode(const CovarianceMatrix& sigma, int mode = 2);

/// Symplectic eigenvalues nu_minus <= nu_plus, from the Hermitian
/// eigenproblem of L^T (iJ) L where sigma = L L^T. Throws std::domain_error
/// unless sigma is positive definite.
SymplecticSpectrum symplectic_eigenvalues_two_mode(const CovarianceMatrix& sigma);

/// Same spectrum from the invariants Delta = det A + det B + 2 det C and
/// det sigma: nu_pm^2 = (Delta +- sqrt(Delta^2 - 4 det sigma)) / 2, with a
/// discriminant within -1e-10 * max(1, Delta^2) clamped to zero. Accurate
/// to roughly sqrt(eps) near degenerate spectra; kept as a cross-check.
SymplecticSpectrum symplectic_eigenvalues_two_mode_closed(const CovarianceMatrix& sigma);

/// Entangled iff the partial transpose has nu_minus < 1 - 1e-10; states on
/// the boundary are reported separable. Throws std::invalid_argument for
/// non-physical input.
SeparabilityVerdict is_separable_two_mode(const CovarianceMatrix& sigma);

}  // namespace cvb
