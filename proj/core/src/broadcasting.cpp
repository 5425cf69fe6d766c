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

#include "cvbroadcast/broadcasting.hpp"

#include <algorithm>

#include "cvbroadcast/optics.hpp"

namespace cvb {
namespace {

// Mode positions in the six-mode output (i, a, b, j, a', b').
constexpr int kModeI = 1;
constexpr int kModeB = 3;
constexpr int kModeBPrime = 6;

Matrix pair_matrix(double xx, double pp, double x_cross, double p_cross) {
  Matrix m(4, 4);
  m << xx, 0, x_cross, 0,
       0, pp, 0, p_cross,
       x_cross, 0, xx, 0,
       0, p_cross, 0, pp;
  return m;
}

}  // namespace

ClosedFormTerms closed_form_terms(double r, double phi, ClosedFormVariant variant) {
  const AmplifierParams amp(r, phi);
  const double c = amp.c(), s = amp.s(), h = amp.h(), k = amp.k();
  const double minus_sq = (c - h * s) * (c - h * s);
  const double plus_sq = (c + h * s) * (c + h * s);
  if (variant == ClosedFormVariant::kPrinted) {
    const double e = s * minus_sq;
    const double noise = k * s * s;
    return {e, e, minus_sq * c + noise, plus_sq * c + noise, variant};
  }
  const double noise = k * k * s * s;
  return {s * minus_sq, s * plus_sq, minus_sq * c + noise, plus_sq * c + noise, variant};
}

CovarianceMatrix initial_state_with_ancillas(double r) {
  // (i, j, a, a') -> (i, a, j, a')
  return permute(direct_sum(two_mode_squeezed_cm(SqueezeParams(r)), identity_cm(2)), {1, 3, 2, 4});
}

SymplecticTransform joint_amplifier(double r, double phi) {
  const auto site = amplifier(AmplifierParams(r, phi));
  return direct_sum(site, site);
}

SymplecticTransform joint_beam_splitter() {
  const auto site = three_mode_beam_splitter();
  return direct_sum(site, site);
}

CovarianceMatrix nonlocal_reduced_closed(double r, double phi, ClosedFormVariant variant) {
  const auto t = closed_form_terms(r, phi, variant);
  return CovarianceMatrix(pair_matrix((t.g + 1) / 2, (t.h + 1) / 2, t.x_cross / 2, -t.p_cross / 2));
}

CovarianceMatrix local_reduced_closed(double r, double phi, ClosedFormVariant variant) {
  const auto t = closed_form_terms(r, phi, variant);
  return CovarianceMatrix(pair_matrix((t.g + 1) / 2, (t.h + 1) / 2, (t.g - 1) / 2, (t.h - 1) / 2));
}

double separability_parameter(double r, double phi, ClosedFormVariant variant) {
  const auto t = closed_form_terms(r, phi, variant);
  if (variant == ClosedFormVariant::kReconciled) return (t.g - 1) * (t.h - 1);
  const AmplifierParams amp(r, phi);
  const double c = amp.c(), s = amp.s(), h = amp.h(), k = amp.k();
  const double shift = k * s * s - 1;
  return ((c - h * s) * (c - h * s) * c + shift) * ((c + h * s * s) * c + shift);
}

BroadcastResult run_broadcast(double r, double phi, BroadcastOptions options) {
  const CovarianceMatrix amplified = apply(joint_amplifier(r, phi), initial_state_with_ancillas(r));
  // (i, a, j, a', b, b') -> (i, a, b, j, a', b')
  const CovarianceMatrix with_blanks = permute(direct_sum(amplified, identity_cm(2)), {1, 2, 5, 3, 4, 6});
  CovarianceMatrix full = apply(joint_beam_splitter(), with_blanks);

  CovarianceMatrix nonlocal = reduce(full, {kModeI, kModeBPrime});
  CovarianceMatrix local = reduce(full, {kModeI, kModeB});
  const auto nonlocal_verdict = is_separable_two_mode(nonlocal);
  const auto local_verdict = is_separable_two_mode(local);

  const CovarianceMatrix reference = two_mode_squeezed_cm(SqueezeParams(r));
  const FidelityReport fb = options.fidelity_target == FidelityTarget::kPipeline
                                ? gaussian_fidelity(reference, nonlocal)
                                : broadcast_fidelity_closed(r, phi, ClosedFormVariant::kPrinted);

  return {r,
          phi,
          std::move(full),
          std::move(nonlocal),
          std::move(local),
          nonlocal_verdict,
          local_verdict,
          separability_parameter(r, phi, ClosedFormVariant::kPrinted),
          separability_parameter(r, phi, ClosedFormVariant::kReconciled),
          fb,
          nonlocal_verdict.entangled && !local_verdict.entangled};
}

bool is_broadcast_successful(const BroadcastResult& res) {
  return res.nonlocal_verdict.entangled && !res.local_verdict.entangled;
}

FidelityReport broadcast_fidelity_closed(double r, double phi, ClosedFormVariant variant) {
  return gaussian_fidelity(two_mode_squeezed_cm(SqueezeParams(r)), nonlocal_reduced_closed(r, phi, variant));
}

double reconciled_mismatch(const BroadcastResult& res) {
  const auto variant = ClosedFormVariant::kReconciled;
  return std::max(
      scaled_difference(nonlocal_reduced_closed(res.r, res.phi, variant).entries(), res.nonlocal_cm.entries()),
      scaled_difference(local_reduced_closed(res.r, res.phi, variant).entries(), res.local_cm.entries()));
}

}  // namespace cvb
