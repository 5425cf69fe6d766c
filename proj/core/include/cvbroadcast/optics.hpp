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

// Optical elements and canonical states as symplectic maps / covariance
// matrices in the (x1, p1, x2, p2, ...) ordering.

#include "cvbroadcast/gaussian_core.hpp"

namespace cvb {

/// Squeezing strength r >= 0 with c = cosh 2r, s = sinh 2r.
class SqueezeParams {
 public:
  /// Throws std::invalid_argument for negative or non-finite r.
  explicit SqueezeParams(double r);

  double r() const { return r_; }
  double c() const { return c_; }
  double s() const { return s_; }

 private:
  double r_;
  double c_;
  double s_;
};

/// Phase-sensitive amplifier gain r_amp >= 0 and phase phi (radians),
/// with h = cos 2phi, k = sin 2phi. Any finite phi is accepted; the
/// amplifier is pi-periodic in phi.
class AmplifierParams {
 public:
  AmplifierParams(double r_amp, double phi);

  double r_amp() const { return gain_.r(); }
  double phi() const { return phi_; }
  double c() const { return gain_.c(); }
  double s() const { return gain_.s(); }
  double h() const { return h_; }
  double k() const { return k_; }

 private:
  SqueezeParams gain_;
  double phi_;
  double h_;
  double k_;
};

/// diag(e^r, e^-r) on one mode.
SymplecticTransform single_mode_squeezer(const SqueezeParams& p);

/// 50:50 beam splitter on two modes: x1' = (x1 + x2)/sqrt2, x2' = (x1 - x2)/sqrt2,
/// and likewise for p.
SymplecticTransform balanced_beam_splitter();

/// 50:50 beam splitter on modes (i, a, b) that mixes i with b and leaves
/// the middle (ancilla) mode untouched.
SymplecticTransform three_mode_beam_splitter();

/// Amplifier on (mode, ancilla):
///   [[c-hs, 0, ks, 0], [0, c+hs, 0, -ks], [ks, 0, c+hs, 0], [0, -ks, 0, c-hs]].
SymplecticTransform amplifier(const AmplifierParams& p);

/// Two-mode squeezed vacuum [[c,0,s,0],[0,c,0,-s],[s,0,c,0],[0,-s,0,c]].
CovarianceMatrix two_mode_squeezed_cm(const SqueezeParams& p);

}  // namespace cvb
