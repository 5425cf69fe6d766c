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

// Local broadcasting of a two-mode squeezed vacuum shared between sites I
// and J. Each site amplifies its mode with a vacuum ancilla (a, a') and
// splits it onto a vacuum blank mode (b, b'). The six output modes are
// ordered (i, a, b, j, a', b').
//
// The matrix pipeline is the ground truth. Closed forms come in two
// variants:
//   kPrinted    - the reference expressions taken literally, including the
//                 symmetric +-E/2 nonlocal cross block, the "k s^2" noise
//                 terms and the "(c + h s^2)" factor in R.
//   kReconciled - expressions re-derived from the pipeline: k^2 s^2 noise,
//                 x cross s(c-hs)^2, p cross -s(c+hs)^2, R = (G-1)(H-1).
// Both agree on the phi = pi/4 line except for R, whose printed second
// factor reduces to c^2 where the pipeline gives c^3.

#include "cvbroadcast/fidelity.hpp"
#include "cvbroadcast/gaussian_core.hpp"
#include "cvbroadcast/separability.hpp"

namespace cvb {

enum class ClosedFormVariant { kPrinted, kReconciled };

/// Correlation and noise terms of the output pairs.
struct ClosedFormTerms {
  double x_cross;  // nonlocal <x x> correlation is x_cross / 2
  double p_cross;  // nonlocal <p p> correlation is -p_cross / 2
  double g;        // x variance of a clone is (g + 1) / 2
  double h;        // p variance of a clone is (h + 1) / 2
  ClosedFormVariant variant;
};

ClosedFormTerms closed_form_terms(double r, double phi, ClosedFormVariant variant);

/// Two-mode squeezed vacuum on (i, j) with vacuum ancillas, ordered (i, a, j, a').
CovarianceMatrix initial_state_with_ancillas(double r);

/// amplifier(r, phi) on (i, a) and on (j, a').
SymplecticTransform joint_amplifier(double r, double phi);

/// Three-mode beam splitter on (i, a, b) and on (j, a', b').
SymplecticTransform joint_beam_splitter();

/// Nonlocal pair (i, b') as a closed form.
CovarianceMatrix nonlocal_reduced_closed(double r, double phi, ClosedFormVariant variant);

/// Local pair (i, b) as a closed form.
CovarianceMatrix local_reduced_closed(double r, double phi, ClosedFormVariant variant);

/// Positive R marks the local pair separable (checked against PPT in tests).
double separability_parameter(double r, double phi, ClosedFormVariant variant);

/// Which nonlocal covariance matrix F_B is measured on.
enum class FidelityTarget { kPipeline, kPrinted };

struct BroadcastOptions {
  FidelityTarget fidelity_target = FidelityTarget::kPipeline;
};

struct BroadcastResult {
  double r;
  double phi;
  CovarianceMatrix full_cm;      // (i, a, b, j, a', b')
  CovarianceMatrix nonlocal_cm;  // (i, b')
  CovarianceMatrix local_cm;     // (i, b)
  SeparabilityVerdict nonlocal_verdict;
  SeparabilityVerdict local_verdict;
  double r_printed;
  double r_reconciled;
  FidelityReport fb;
  bool success;
};

/// Runs the full six-mode pipeline. With FidelityTarget::kPrinted, throws
/// std::invalid_argument where the printed nonlocal matrix is not physical.
BroadcastResult run_broadcast(double r, double phi, BroadcastOptions options = {});

/// Nonlocal pairs entangled and local pairs separable.
bool is_broadcast_successful(const BroadcastResult& res);

/// F_B against a closed-form nonlocal matrix; throws std::invalid_argument
/// where that matrix is not physical.
FidelityReport broadcast_fidelity_closed(double r, double phi, ClosedFormVariant variant);

/// Largest scaled difference between the reconciled closed forms and the
/// pipeline's reduced matrices of `res`.
double reconciled_mismatch(const BroadcastResult& res);

}  // namespace cvb
