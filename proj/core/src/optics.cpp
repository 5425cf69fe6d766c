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

#include "cvbroadcast/optics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cvb {

SqueezeParams::SqueezeParams(double r) : r_(r), c_(std::cosh(2.0 * r)), s_(std::sinh(2.0 * r)) {
  if (!std::isfinite(r) || r < 0.0) {
    throw std::invalid_argument("squeezing parameter must be finite and >= 0, got " + std::to_string(r));
  }
}

AmplifierParams::AmplifierParams(double r_amp, double phi)
    : gain_(r_amp), phi_(phi), h_(std::cos(2.0 * phi)), k_(std::sin(2.0 * phi)) {
  if (!std::isfinite(phi)) throw std::invalid_argument("amplifier phase must be finite");
}

SymplecticTransform single_mode_squeezer(const SqueezeParams& p) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::exp(p.r());
  m(1, 1) = std::exp(-p.r());
  return SymplecticTransform(std::move(m));
}

SymplecticTransform balanced_beam_splitter() {
  const double t = std::sqrt(0.5);
  Matrix m(4, 4);
  m << t, 0, t, 0,
       0, t, 0, t,
       t, 0, -t, 0,
       0, t, 0, -t;
  return SymplecticTransform(std::move(m));
}

SymplecticTransform three_mode_beam_splitter() {
  const double t = std::sqrt(0.5);
  Matrix m(6, 6);
  m << t, 0, 0, 0, t, 0,
       0, t, 0, 0, 0, t,
       0, 0, 1, 0, 0, 0,
       0, 0, 0, 1, 0, 0,
       t, 0, 0, 0, -t, 0,
       0, t, 0, 0, 0, -t;
  return SymplecticTransform(std::move(m));
}

SymplecticTransform amplifier(const AmplifierParams& p) {
  const double c = p.c();
  const double hs = p.h() * p.s();
  const double ks = p.k() * p.s();
  Matrix m(4, 4);
  m << c - hs, 0, ks, 0,
       0, c + hs, 0, -ks,
       ks, 0, c + hs, 0,
       0, -ks, 0, c - hs;
  return SymplecticTransform(std::move(m));
}

CovarianceMatrix two_mode_squeezed_cm(const SqueezeParams& p) {
  const double c = p.c();
  const double s = p.s();
  Matrix m(4, 4);
  m << c, 0, s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, -s, 0, c;
  return CovarianceMatrix(std::move(m));
}

}  // namespace cvb
