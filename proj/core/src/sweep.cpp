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

#include "cvbroadcast/sweep.hpp"

#include <fmt/format.h>

#include <array>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "cvbroadcast/cloning.hpp"
#include "cvbroadcast/fidelity.hpp"

namespace cvb {
namespace {

struct QuantityName {
  Quantity quantity;
  std::string_view name;
};

constexpr std::array<QuantityName, 7> kQuantityNames{{
    {Quantity::kRPrinted, "R_printed"},
    {Quantity::kRReconciled, "R_reconciled"},
    {Quantity::kFbPipeline, "FB_pipeline"},
    {Quantity::kFbPrinted, "FB_printed"},
    {Quantity::kCloneF, "clone_F"},
    {Quantity::kNuNonlocal, "nu_nonlocal"},
    {Quantity::kNuLocal, "nu_local"},
}};

void check_axis(const Axis& axis, const char* name) {
  if (!std::isfinite(axis.min) || !std::isfinite(axis.max)) {
    throw std::invalid_argument(fmt::format("{} range must be finite", name));
  }
  if (axis.min > axis.max) {
    throw std::invalid_argument(fmt::format("{} range is inverted ({} > {})", name, axis.min, axis.max));
  }
  if (axis.steps < 1) throw std::invalid_argument(fmt::format("{} steps must be >= 1", name));
}

// Running maximum for one report row.
class RowTracker {
 public:
  explicit RowTracker(std::vector<VerifyRow>& rows) : rows_(rows) {}

  void record(std::string_view formula, ClosedFormVariant variant, std::string_view scope, double d, double r,
              double phi) {
    VerifyRow* row = nullptr;
    for (auto& candidate : rows_) {
      if (candidate.formula == formula && candidate.variant == variant && candidate.scope == scope) {
        row = &candidate;
        break;
      }
    }
    if (row == nullptr) {
      rows_.push_back({std::string(formula), variant, std::string(scope), d, r, phi});
      return;
    }
    if (d > row->max_discrepancy || (std::isnan(d) && !std::isnan(row->max_discrepancy))) {
      row->max_discrepancy = d;
      row->at_r = r;
      row->at_phi = phi;
    }
  }

 private:
  std::vector<VerifyRow>& rows_;
};

void record_clone_point(RowTracker& tracker, double r, double phi, bool on_phi0_line) {
  const auto printed = ClosedFormVariant::kPrinted;
  const CloneResult res = run_clone(r, phi);
  Matrix closed = Matrix::Zero(2, 2);
  closed(0, 0) = res.closed_form.x;
  closed(1, 1) = res.closed_form.p;
  if (!on_phi0_line) {
    tracker.record("clone_variances", printed, "grid", scaled_difference(res.clone_cm.entries(), closed), r, phi);
    tracker.record("clone_fidelity", printed, "grid", scaled_difference(clone_fidelity_closed(r, phi), res.fidelity.value),
                   r, phi);
  } else {
    tracker.record("clone_fidelity_phi0", printed, "phi=0",
                   scaled_difference(clone_fidelity_phi0(r), res.fidelity.value), r, phi);
  }
}

void record_broadcast_point(RowTracker& tracker, double r, double phi, std::string_view scope) {
  const BroadcastResult res = run_broadcast(r, phi);
  const Matrix& nl = res.nonlocal_cm.entries();
  const Matrix& lo = res.local_cm.entries();
  const double g = 2 * nl(0, 0) - 1;
  const double h = 2 * nl(1, 1) - 1;
  const double x_cross = 2 * nl(0, 2);
  const double p_cross = -2 * nl(1, 3);
  const double r_pipeline = (lo(0, 0) + lo(0, 2) - 1) * (lo(1, 1) + lo(1, 3) - 1);

  for (const auto variant : {ClosedFormVariant::kPrinted, ClosedFormVariant::kReconciled}) {
    const auto t = closed_form_terms(r, phi, variant);
    const double terms = std::max({scaled_difference(t.x_cross, x_cross), scaled_difference(t.p_cross, p_cross),
                                   scaled_difference(t.g, g), scaled_difference(t.h, h)});
    tracker.record("nonlocal_cm", variant, scope,
                   scaled_difference(nonlocal_reduced_closed(r, phi, variant).entries(), nl), r, phi);
    tracker.record("output_terms", variant, scope, terms, r, phi);
    tracker.record("local_cm", variant, scope, scaled_difference(local_reduced_closed(r, phi, variant).entries(), lo),
                   r, phi);
    tracker.record("separability_R", variant, scope, scaled_difference(separability_parameter(r, phi, variant), r_pipeline),
                   r, phi);
  }
}

std::string_view variant_name(ClosedFormVariant v) { return v == ClosedFormVariant::kPrinted ? "printed" : "reconciled"; }

}  // namespace

std::string_view quantity_name(Quantity q) {
  for (const auto& entry : kQuantityNames) {
    if (entry.quantity == q) return entry.name;
  }
  return "unknown";
}

std::optional<Quantity> parse_quantity(std::string_view name, ClosedFormVariant variant) {
  const bool printed = variant == ClosedFormVariant::kPrinted;
  if (name == "R") return printed ? Quantity::kRPrinted : Quantity::kRReconciled;
  if (name == "FB") return printed ? Quantity::kFbPrinted : Quantity::kFbPipeline;
  for (const auto& entry : kQuantityNames) {
    if (entry.name == name) return entry.quantity;
  }
  return std::nullopt;
}

std::vector<double> Axis::values() const {
  if (min == max) return {min};
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i < steps; ++i) out.push_back(min + (max - min) * i / steps);
  out.push_back(max);
  return out;
}

void SweepConfig::validate() const {
  check_axis(r, "r");
  check_axis(phi, "phi");
  if (r.min < 0.0) throw std::invalid_argument("r must be >= 0");
}

double evaluate(Quantity q, double r, double phi) {
  switch (q) {
    case Quantity::kRPrinted:
      return separability_parameter(r, phi, ClosedFormVariant::kPrinted);
    case Quantity::kRReconciled:
      return separability_parameter(r, phi, ClosedFormVariant::kReconciled);
    case Quantity::kFbPipeline:
      return run_broadcast(r, phi).fb.value;
    case Quantity::kFbPrinted:
      try {
        return broadcast_fidelity_closed(r, phi, ClosedFormVariant::kPrinted).value;
      } catch (const std::invalid_argument&) {
        return std::numeric_limits<double>::quiet_NaN();
      }
    case Quantity::kCloneF:
      return run_clone(r, phi).fidelity.value;
    case Quantity::kNuNonlocal:
      return run_broadcast(r, phi).nonlocal_verdict.min_pt_symplectic_eigenvalue;
    case Quantity::kNuLocal:
      return run_broadcast(r, phi).local_verdict.min_pt_symplectic_eigenvalue;
  }
  throw std::invalid_argument("evaluate: unknown quantity");
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const auto rs = cfg.r.values();
  const auto phis = cfg.phi.values();
  std::vector<SweepRow> rows;
  rows.reserve(rs.size() * phis.size());
  for (double r : rs) {
    for (double phi : phis) rows.push_back({r, phi, evaluate(cfg.quantity, r, phi)});
  }
  return rows;
}

std::string format_value(double v) { return fmt::format("{:.12g}", v); }

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  std::string buf = "r,phi,value\n";
  for (const auto& row : rows) {
    buf += fmt::format("{:.12g},{:.12g},{:.12g}\n", row.r, row.phi, row.value);
  }
  out << buf;
}

std::vector<VerifyRow> verify_closed_forms(const Axis& r_axis, const Axis& phi_axis) {
  check_axis(r_axis, "r");
  check_axis(phi_axis, "phi");
  std::vector<VerifyRow> rows;
  RowTracker tracker(rows);
  const auto rs = r_axis.values();
  for (double r : rs) {
    for (double phi : phi_axis.values()) {
      record_clone_point(tracker, r, phi, false);
      record_broadcast_point(tracker, r, phi, "grid");
    }
  }
  for (double r : rs) {
    record_clone_point(tracker, r, 0.0, true);
    record_broadcast_point(tracker, r, std::numbers::pi / 4, "phi=pi/4");
    record_broadcast_point(tracker, r, 0.0, "phi=0");
  }
  return rows;
}

const VerifyRow* find_row(const std::vector<VerifyRow>& rows, std::string_view formula, ClosedFormVariant variant,
                          std::string_view scope) {
  for (const auto& row : rows) {
    if (row.formula == formula && row.variant == variant && row.scope == scope) return &row;
  }
  return nullptr;
}

void write_verify_report(std::ostream& out, const std::vector<VerifyRow>& rows) {
  std::string buf = fmt::format("{:<20} {:<11} {:<9} {:>16} {:>10} {:>10}\n", "formula", "variant", "scope",
                                "max_discrepancy", "at_r", "at_phi");
  for (const auto& row : rows) {
    buf += fmt::format("{:<20} {:<11} {:<9} {:>16.6e} {:>10.6f} {:>10.6f}\n", row.formula, variant_name(row.variant),
                       row.scope, row.max_discrepancy, row.at_r, row.at_phi);
  }
  out << buf;
}

}  // namespace cvb
