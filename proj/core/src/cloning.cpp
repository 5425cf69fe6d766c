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

#include "cvbroadcast/cloning.hpp"

#include <cmath>

#include "cvbroadcast/optics.hpp"

namespace cvb {

CloneVariances clone_variances_closed(double r, double phi) {
  const AmplifierParams amp(r, phi);
  const double c = amp.c(), s = amp.s(), h = amp.h(), k = amp.k();
  const double added = k * k * s * s + 1.0;
  return {(std::exp(2.0 * r) * (c - h * s) * (c - h * s) + added) / 2.0,
          (std::exp(-2.0 * r) * (c + h * s) * (c + h * s) + added) / 2.0};
}

SymplecticTransform clone_transform(double r, double phi) {
  const auto amp = direct_sum(amplifier(AmplifierParams(r, phi)), SymplecticTransform::identity(1));
  return compose(three_mode_beam_splitter(), amp);
}

CloneResult run_clone(double r, double phi) {
  const CovarianceMatrix input = apply(single_mode_squeezer(SqueezeParams(r)), identity_cm(1));
  CovarianceMatrix full = apply(clone_transform(r, phi), direct_sum(input, identity_cm(2)));
  CovarianceMatrix clone = reduce(full, {1});
  const FidelityReport fid = gaussian_fidelity(input, clone);
  return {std::move(full), std::move(clone), clone_variances_closed(r, phi), fid};
}

}  // namespace cvb
