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

// Symmetric cloning of a single-mode squeezed vacuum. The input mode i is
// amplified together with a vacuum ancilla a, then mixed with a vacuum
// blank mode b on a 50:50 beam splitter; i and b carry the two clones.
// Mode ordering is (i, a, b) and the amplifier gain equals the input
// squeezing r.

#include "cvbroadcast/fidelity.hpp"
#include "cvbroadcast/gaussian_core.hpp"

namespace cvb {

/// Diagonal of a clone's covariance matrix: x and p variances.
struct CloneVariances {
  double x;
  double p;
};

/// x = (e^2r (c - hs)^2 + k^2 s^2 + 1) / 2, p = (e^-2r (c + hs)^2 + k^2 s^2 + 1) / 2.
CloneVariances clone_variances_closed(double r, double phi);

/// Beam splitter after (amplifier on (i, a)) (+) identity on b.
SymplecticTransform clone_transform(double r, double phi);

struct CloneResult {
  CovarianceMatrix full_cm;   // modes (i, a, b)
  CovarianceMatrix clone_cm;  // reduced on mode i
  CloneVariances closed_form;
  FidelityReport fidelity;    // against the squeezed input
};

/// Runs the network on diag(e^2r, e^-2r) (+) vacuum (+) vacuum.
CloneResult run_clone(double r, double phi);

}  // namespace cvb
