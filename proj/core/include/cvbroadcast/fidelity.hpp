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

// Determinant-based fidelity between zero-mean Gaussian states:
//
//   F = 1 / (sqrt(Det[in + out] + delta) - sqrt(delta)),
//   delta = 4 (Det[in] - 1/4) (Det[out] - 1/4).
//
// The same expression is used for one- and two-mode states. For two modes
// it is a figure of merit, not the general multimode Uhlmann fidelity.

#include "cvbroadcast/gaussian_core.hpp"

namespace cvb {

struct FidelityReport {
  double value;
  /// Det[in + out].
  double det_sum;
  double delta;
};

/// Both states must be physical and have the same mode count (1 or 2).
FidelityReport gaussian_fidelity(const CovarianceMatrix& in, const CovarianceMatrix& out);

/// Clone fidelity against the squeezed input diag(e^2r, e^-2r):
///   1 / (sqrt((P + e^2r)(M + e^-2r) + 3(PM - 1/4)) - sqrt(3(PM - 1/4))).
double clone_fidelity_closed(double r, double phi);

/// phi = 0 specialization: 2 / (sqrt(8c^2 + 12c + 5) - sqrt(3 + 6c)), c = cosh 2r.
double clone_fidelity_phi0(double r);

}  // namespace cvb
