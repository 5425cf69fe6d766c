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

#include "cvbroadcast/gaussian_core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include "two_mode_spectrum.hpp"

namespace cvb {
namespace {

void require_phase_space_shape(const Matrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols() || m.rows() % 2 != 0) {
    throw std::invalid_argument(std::string(what) + ": expected a square matrix of size 2n x 2n with n >= 1, got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": non-finite entry");
  }
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

std::vector<Eigen::Index> quadrature_rows(const ModeSelection& modes) {
  std::vector<Eigen::Index> rows;
  rows.reserve(2 * modes.indices().size());
  for (int mode : modes.indices()) {
    rows.push_back(2 * (mode - 1));
    rows.push_back(2 * (mode - 1) + 1);
  }
  return rows;
}

Matrix select(const Matrix& m, const std::vector<Eigen::Index>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = m(rows[i], rows[j]);
    }
  }
  return out;
}

// Pivoted LDL^H of a Hermitian matrix; returns the smallest pivot seen, or
// -inf if a vanishing pivot sits on a nonzero column (indefinite).
PhysicalityCheck hermitian_psd_test(Eigen::MatrixXcd h, double tol) {
  const Eigen::Index n = h.rows();
  double min_pivot = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    for (Eigen::Index j = k + 1; j < n; ++j) {
      if (h(j, j).real() > h(p, p).real()) p = j;
    }
    if (p != k) {
      h.row(k).swap(h.row(p));
      h.col(k).swap(h.col(p));
    }
    const double d = h(k, k).real();
    min_pivot = std::min(min_pivot, d);
    if (d < -tol) return {false, d};
    if (d <= tol) {
      // Largest remaining diagonal is ~0: a PSD remainder must vanish.
      const double rest = h.bottomRightCorner(n - k, n - k).cwiseAbs().maxCoeff();
      if (rest > tol) return {false, -rest};
      return {true, min_pivot};
    }
    const Eigen::VectorXcd col = h.col(k).tail(n - k - 1) / d;
    h.bottomRightCorner(n - k - 1, n - k - 1).noalias() -= col * h.row(k).tail(n - k - 1);
  }
  return {true, min_pivot};
}

}  // namespace

double entry_scale(const Matrix& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }

double scaled_difference(const Matrix& actual, const Matrix& reference) {
  return (actual - reference).cwiseAbs().maxCoeff() / entry_scale(reference);
}

double scaled_difference(double actual, double reference) {
  return std::abs(actual - reference) / std::max(1.0, std::abs(reference));
}

Matrix symplectic_form(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("symplectic_form: mode count must be >= 1");
  Matrix j = Matrix::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    j(2 * k, 2 * k + 1) = 1.0;
    j(2 * k + 1, 2 * k) = -1.0;
  }
  return j;
}

CovarianceMatrix::CovarianceMatrix(Matrix entries) : entries_(std::move(entries)) {
  require_phase_space_shape(entries_, "CovarianceMatrix");
  const double asym = (entries_ - entries_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kAlgebraicTolerance * entry_scale(entries_)) {
    throw std::invalid_argument("CovarianceMatrix: not symmetric (max asymmetry " + std::to_string(asym) + ")");
  }
}

SymplecticTransform::SymplecticTransform(Matrix entries) : entries_(std::move(entries)) {
  require_phase_space_shape(entries_, "SymplecticTransform");
}

SymplecticTransform SymplecticTransform::identity(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("SymplecticTransform::identity: mode count must be >= 1");
  return SymplecticTransform(Matrix::Identity(2 * n_modes, 2 * n_modes));
}

ModeSelection::ModeSelection(std::initializer_list<int> indices) : ModeSelection(std::vector<int>(indices)) {}

ModeSelection::ModeSelection(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw std::invalid_argument("ModeSelection: empty selection");
  std::vector<int> sorted = indices_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1) throw std::out_of_range("ModeSelection: mode indices are 1-based");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("ModeSelection: duplicate mode index");
  }
}

void ModeSelection::check_bounds(int n_modes) const {
  for (int mode : indices_) {
    if (mode > n_modes) {
      throw std::out_of_range("ModeSelection: mode " + std::to_string(mode) + " exceeds mode count " +
                              std::to_string(n_modes));
    }
  }
}

bool ModeSelection::is_permutation_of(int n_modes) const {
  // Indices are distinct and >= 1, so size plus upper bound suffices.
  return size() == n_modes && *std::max_element(indices_.begin(), indices_.end()) == n_modes;
}

ModeSelection ModeSelection::inverse() const {
  std::vector<int> inv(indices_.size());
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    const auto target = static_cast<std::size_t>(indices_[k] - 1);
    if (target >= inv.size()) throw std::invalid_argument("ModeSelection::inverse: not a permutation");
    inv[target] = static_cast<int>(k) + 1;
  }
  return ModeSelection(std::move(inv));
}

CovarianceMatrix identity_cm(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("identity_cm: mode count must be >= 1");
  return CovarianceMatrix(Matrix::Identity(2 * n_modes, 2 * n_modes));
}

CovarianceMatrix direct_sum(const CovarianceMatrix& a, const CovarianceMatrix& b) {
  return CovarianceMatrix(block_diagonal(a.entries(), b.entries()));
}

SymplecticTransform direct_sum(const SymplecticTransform& a, const SymplecticTransform& b) {
  return SymplecticTransform(block_diagonal(a.entries(), b.entries()));
}

SymplecticTransform compose(const SymplecticTransform& outer, const SymplecticTransform& inner) {
  if (outer.n_modes() != inner.n_modes()) {
    throw std::invalid_argument("compose: mode counts differ");
  }
  return SymplecticTransform(outer.entries() * inner.entries());
}

CovarianceMatrix apply(const SymplecticTransform& s, const CovarianceMatrix& sigma) {
  if (s.n_modes() != sigma.n_modes()) {
    throw std::invalid_argument("apply: transform acts on " + std::to_string(s.n_modes()) +
                                " modes but the state has " + std::to_string(sigma.n_modes()));
  }
  const Matrix out = s.entries() * sigma.entries() * s.entries().transpose();
  return CovarianceMatrix(0.5 * (out + out.transpose()));
}

CovarianceMatrix reduce(const CovarianceMatrix& sigma, const ModeSelection& keep) {
  keep.check_bounds(sigma.n_modes());
  return CovarianceMatrix(select(sigma.entries(), quadrature_rows(keep)));
}

CovarianceMatrix permute(const CovarianceMatrix& sigma, const ModeSelection& order) {
  if (!order.is_permutation_of(sigma.n_modes())) throw std::invalid_argument("permute: order is not a permutation");
  return CovarianceMatrix(select(sigma.entries(), quadrature_rows(order)));
}

SymplecticTransform permute(const SymplecticTransform& s, const ModeSelection& order) {
  if (!order.is_permutation_of(s.n_modes())) throw std::invalid_argument("permute: order is not a permutation");
  return SymplecticTransform(select(s.entries(), quadrature_rows(order)));
}

SymplecticCheck is_symplectic(const SymplecticTransform& s) {
  const Matrix j = symplectic_form(s.n_modes());
  const double residual = (s.entries() * j * s.entries().transpose() - j).cwiseAbs().maxCoeff();
  const double scale = entry_scale(s.entries());
  return {residual <= kAlgebraicTolerance * scale * scale, residual};
}

PhysicalityCheck is_physical(const CovarianceMatrix& sigma) {
  const Matrix& m = sigma.entries();
  const int n = sigma.n_modes();
  const double tol = kSpectralTolerance * entry_scale(m);

  if (n <= 2 && m.llt().info() == Eigen::Success) {
    const double nu_minus = n == 1 ? std::sqrt(m.determinant()) : detail::two_mode_spectrum(m).minus;
    const double margin = nu_minus - 1.0;
    return {margin >= -tol, margin};
  }

  const Eigen::MatrixXcd h = m.cast<std::complex<double>>() +
                             std::complex<double>(0.0, 1.0) * symplectic_form(n).cast<std::complex<double>>();
  return hermitian_psd_test(h, tol);
}

}  // namespace cvb
