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

// cvbcast: single-point cloning/broadcasting reports, (r, phi) sweeps to
// CSV, and the closed-form reconciliation report.
//
// Exit codes: 0 success, 1 internal consistency failure, 2 usage error.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "cvbroadcast/broadcasting.hpp"
#include "cvbroadcast/cloning.hpp"
#include "cvbroadcast/fidelity.hpp"
#include "cvbroadcast/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitUsage = 2;

struct PointArgs {
  double r = 0.0;
  double phi = 0.0;
  std::optional<double> phi_pi;

  double resolved_phi() const { return phi_pi ? *phi_pi * std::numbers::pi : phi; }
};

void add_point_options(CLI::App* cmd, PointArgs& args) {
  cmd->add_option("--r", args.r, "Squeezing parameter r >= 0")->required()->check(CLI::NonNegativeNumber);
  auto* phi = cmd->add_option("--phi", args.phi, "Amplifier phase in radians");
  auto* phi_pi = cmd->add_option("--phi-pi", args.phi_pi, "Amplifier phase as a multiple of pi");
  phi->excludes(phi_pi);
}

int run_clone_cmd(const PointArgs& args) {
  const double phi = args.resolved_phi();
  const cvb::CloneResult res = cvb::run_clone(args.r, phi);
  const double closed_f = cvb::clone_fidelity_closed(args.r, phi);
  const double residual =
      std::max({cvb::scaled_difference(res.clone_cm(0, 0), res.closed_form.x),
                cvb::scaled_difference(res.clone_cm(1, 1), res.closed_form.p),
                cvb::scaled_difference(res.fidelity.value, closed_f)});

  std::string out;
  out += fmt::format("clone r={} phi={}\n", cvb::format_value(args.r), cvb::format_value(phi));
  out += fmt::format("P (x variance)      pipeline={} closed={}\n", cvb::format_value(res.clone_cm(0, 0)),
                     cvb::format_value(res.closed_form.x));
  out += fmt::format("M (p variance)      pipeline={} closed={}\n", cvb::format_value(res.clone_cm(1, 1)),
                     cvb::format_value(res.closed_form.p));
  out += fmt::format("fidelity            pipeline={} closed={}\n", cvb::format_value(res.fidelity.value),
                     cvb::format_value(closed_f));
  if (std::abs(phi) == 0.0) {
    out += fmt::format("fidelity (phi=0)    closed={}\n", cvb::format_value(cvb::clone_fidelity_phi0(args.r)));
  }
  out += fmt::format("agreement residual  {:.3e}\n", residual);
  std::cout << out;
  if (!(residual <= cvb::kAlgebraicTolerance)) {
    std::cerr << "error: pipeline and closed form disagree beyond tolerance\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

std::string verdict_text(const cvb::SeparabilityVerdict& v) {
  return fmt::format("{} (pt nu_minus={})", v.entangled ? "entangled" : "separable",
                     cvb::format_value(v.min_pt_symplectic_eigenvalue));
}

int run_broadcast_cmd(const PointArgs& args, cvb::ClosedFormVariant variant) {
  const double phi = args.resolved_phi();
  const cvb::BroadcastResult res = cvb::run_broadcast(args.r, phi);
  const double mismatch = cvb::reconciled_mismatch(res);

  std::string fb_printed;
  try {
    fb_printed = cvb::format_value(cvb::broadcast_fidelity_closed(args.r, phi, cvb::ClosedFormVariant::kPrinted).value);
  } catch (const std::invalid_argument&) {
    fb_printed = "undefined (printed nonlocal matrix is not physical)";
  }

  std::string out;
  out += fmt::format("broadcast r={} phi={}\n", cvb::format_value(args.r), cvb::format_value(phi));
  out += fmt::format("nonlocal pair (i,b')  {}\n", verdict_text(res.nonlocal_verdict));
  out += fmt::format("local pair (i,b)      {}\n", verdict_text(res.local_verdict));
  out += fmt::format("R printed             {}\n", cvb::format_value(res.r_printed));
  out += fmt::format("R reconciled          {}\n", cvb::format_value(res.r_reconciled));
  out += fmt::format("F_B pipeline          {}\n", cvb::format_value(res.fb.value));
  out += fmt::format("F_B printed           {}\n", fb_printed);
  out += fmt::format("F_B ({})  {}\n", variant == cvb::ClosedFormVariant::kPrinted ? "selected=printed   "
                                                                                     : "selected=reconciled",
                     variant == cvb::ClosedFormVariant::kPrinted ? fb_printed : cvb::format_value(res.fb.value));
  out += fmt::format("success               {}\n", res.success ? "true" : "false");
  out += fmt::format("reconciled residual   {:.3e}\n", mismatch);
  std::cout << out;
  if (!(mismatch <= cvb::kAlgebraicTolerance)) {
    std::cerr << "error: reconciled closed forms disagree with the pipeline beyond tolerance\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian cloning and entanglement-broadcasting simulator"};
  app.require_subcommand(1);

  PointArgs clone_args;
  auto* clone_cmd = app.add_subcommand("clone", "Single-mode cloning report at one (r, phi)");
  add_point_options(clone_cmd, clone_args);

  PointArgs bc_args;
  std::string bc_variant = "reconciled";
  auto* bc_cmd = app.add_subcommand("broadcast", "Entanglement-broadcasting report at one (r, phi)");
  add_point_options(bc_cmd, bc_args);
  bc_cmd->add_option("--variant", bc_variant, "Closed form used for the selected F_B")
      ->check(CLI::IsMember({"printed", "reconciled"}));

  cvb::SweepConfig cfg;
  std::optional<double> phi_min_pi, phi_max_pi;
  std::string quantity = "R";
  std::string sweep_variant = "reconciled";
  std::string out_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a quantity over an (r, phi) grid and write CSV");
  sweep_cmd->add_option("--r-min", cfg.r.min, "Smallest r")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--r-max", cfg.r.max, "Largest r")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--r-steps", cfg.r.steps, "Intervals along r")->check(CLI::PositiveNumber);
  auto* pmin = sweep_cmd->add_option("--phi-min", cfg.phi.min, "Smallest phi (radians)");
  auto* pmax = sweep_cmd->add_option("--phi-max", cfg.phi.max, "Largest phi (radians)");
  sweep_cmd->add_option("--phi-min-pi", phi_min_pi, "Smallest phi as a multiple of pi")->excludes(pmin);
  sweep_cmd->add_option("--phi-max-pi", phi_max_pi, "Largest phi as a multiple of pi")->excludes(pmax);
  sweep_cmd->add_option("--phi-steps", cfg.phi.steps, "Intervals along phi")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--quantity", quantity,
                        "R_printed|R_reconciled|FB_pipeline|FB_printed|clone_F|nu_nonlocal|nu_local (or R, FB)");
  sweep_cmd->add_option("--variant", sweep_variant, "Variant used to resolve R and FB")
      ->check(CLI::IsMember({"printed", "reconciled"}));
  sweep_cmd->add_option("--out", out_path, "Output CSV path ('-' for stdout)")->required();

  cvb::Axis verify_r{0.0, 2.0, 100};
  cvb::Axis verify_phi{0.0, std::numbers::pi / 2, 100};
  auto* verify_cmd = app.add_subcommand("verify", "Compare closed forms against the matrix pipeline");
  verify_cmd->add_option("--r-max", verify_r.max, "Largest r")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--r-steps", verify_r.steps, "Intervals along r")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--phi-steps", verify_phi.steps, "Intervals along phi")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  auto to_variant = [](const std::string& v) {
    return v == "printed" ? cvb::ClosedFormVariant::kPrinted : cvb::ClosedFormVariant::kReconciled;
  };

  try {
    if (*clone_cmd) return run_clone_cmd(clone_args);
    if (*bc_cmd) return run_broadcast_cmd(bc_args, to_variant(bc_variant));
    if (*verify_cmd) {
      cvb::write_verify_report(std::cout, cvb::verify_closed_forms(verify_r, verify_phi));
      return kExitOk;
    }
    if (*sweep_cmd) {
      if (phi_min_pi) cfg.phi.min = *phi_min_pi * std::numbers::pi;
      if (phi_max_pi) cfg.phi.max = *phi_max_pi * std::numbers::pi;
      const auto q = cvb::parse_quantity(quantity, to_variant(sweep_variant));
      if (!q) throw std::invalid_argument("unknown quantity '" + quantity + "'");
      cfg.quantity = *q;
      cfg.validate();
      if (out_path == "-") {
        cvb::write_csv(std::cout, cvb::run_sweep(cfg));
        return kExitOk;
      }
      std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
      if (!file) throw std::invalid_argument("cannot open '" + out_path + "' for writing");
      cvb::write_csv(file, cvb::run_sweep(cfg));
      file.close();
      if (!file) throw std::invalid_argument("failed writing '" + out_path + "'");
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInconsistent;
  }
  return kExitUsage;
}
