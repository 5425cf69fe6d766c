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

// Rectangular (r, phi) sweeps, CSV emission and the closed-form
// reconciliation report behind the cvbcast tool.

#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cvbroadcast/broadcasting.hpp"

namespace cvb {

enum class Quantity {
  kRPrinted,
  kRReconciled,
  kFbPipeline,
  kFbPrinted,
  kCloneF,
  kNuNonlocal,
  kNuLocal,
};

std::string_view quantity_name(Quantity q);

/// Accepts the full names (R_printed, FB_pipeline, clone_F, ...) and the
/// short forms "R" and "FB", which are resolved with `variant`.
std::optional<Quantity> parse_quantity(std::string_view name, ClosedFormVariant variant = ClosedFormVariant::kReconciled);

/// steps + 1 evenly spaced points from min to max; a single point when min == max.
struct Axis {
  double min;
  double max;
  int steps;

  std::vector<double> values() const;
};

struct SweepConfig {
  Axis r{0.0, 2.0, 100};
  Axis phi{0.0, std::numbers::pi / 2, 100};
  Quantity quantity = Quantity::kRReconciled;

  /// Throws std::invalid_argument on negative r, inverted ranges, steps < 1
  /// or non-finite bounds.
  void validate() const;
};

struct SweepRow {
  double r;
  double phi;
  double value;
};

/// One quantity at one grid point. FB_printed is NaN where the printed
/// nonlocal matrix is not a physical state.
double evaluate(Quantity q, double r, double phi);

/// Row-major grid: r outer, phi inner.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

/// Header `r,phi,value`, LF line endings, 12 significant digits, C locale.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::string format_value(double v);

struct VerifyRow {
  std::string formula;
  ClosedFormVariant variant;
  std::string scope;  // "grid", "phi=pi/4" or "phi=0"
  double max_discrepancy;
  double at_r;
  double at_phi;
};

/// Compares every closed form against the matrix pipeline over the grid
/// and along the phi = pi/4 and phi = 0 lines. Discrepancies are scaled
/// by max(1, |pipeline value|).
std::vector<VerifyRow> verify_closed_forms(const Axis& r_axis = {0.0, 2.0, 100},
                                           const Axis& phi_axis = {0.0, std::numbers::pi / 2, 100});

const VerifyRow* find_row(const std::vector<VerifyRow>& rows, std::string_view formula, ClosedFormVariant variant,
                          std::string_view scope);

void write_verify_report(std::ostream& out, const std::vector<VerifyRow>& rows);

}  // namespace cvb
