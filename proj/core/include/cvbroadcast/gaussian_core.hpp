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

// Covariance-matrix algebra for zero-mean Gaussian states.
//
// Quadratures are ordered (x1, p1, x2, p2, ..., xn, pn) and the vacuum
// covariance matrix is the identity. Every value type here is immutable
// after construction.

#include <Eigen/Dense>

#include <initializer_list>
#include <vector>

namespace cvb {

using Matrix = Eigen::MatrixXd;

/// Entrywise tolerance for algebraic identities, relative to max(1, |scale|).
inline constexpr double kAlgebraicTolerance = 1e-12;
/// Tolerance for eigenvalue and factorization based checks.
inline constexpr double kSpectralTolerance = 1e-9;

/// max(1, max |entry|); the scale that relative tolerances are measured against.
double entry_scale(const Matrix& m);

/// max |a - b| / max(1, max |reference|).
double scaled_difference(const Matrix& actual, const Matrix& reference);
double scaled_difference(double actual, double reference);

/// Block-diagonal J with one [[0, 1], [-1, 0]] block per mode.
Matrix symplectic_form(int n_modes);

class CovarianceMatrix {
 public:
  /// Throws std::invalid_argument unless `entries` is square, of even
  /// nonzero size, finite and symmetric within kAlgebraicTolerance.
  explicit CovarianceMatrix(Matrix entries);

  int n_modes() const { return static_cast<int>(entries_.rows() / 2); }
  const Matrix& entries() const { return entries_; }
  double operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

 private:
  Matrix entries_;
};

/// A linear phase-space map. Construction only checks the shape;
/// use is_symplectic() to validate S J S^T = J.
class SymplecticTransform {
 public:
  explicit SymplecticTransform(Matrix entries);

  static SymplecticTransform identity(int n_modes);

  int n_modes() const { return static_cast<int>(entries_.rows() / 2); }
  const Matrix& entries() const { return entries_; }
  double operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

 private:
  Matrix entries_;
};

/// Ordered list of distinct 1-based mode indices.
class ModeSelection {
 public:
  ModeSelection(std::initializer_list<int> indices);
  explicit ModeSelection(std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }

  /// Throws std::out_of_range if any index falls outside 1..n_modes.
  void check_bounds(int n_modes) const;
  bool is_permutation_of(int n_modes) const;
  ModeSelection inverse() const;

 private:
  std::vector<int> indices_;
};

/// n vacuum modes. Throws std::invalid_argument for n < 1.
CovarianceMatrix identity_cm(int n_modes);

/// Block-diagonal composition; modes of `a` come first.
CovarianceMatrix direct_sum(const CovarianceMatrix& a, const CovarianceMatrix& b);
SymplecticTransform direct_sum(const SymplecticTransform& a, const SymplecticTransform& b);

/// Matrix product outer * inner: `inner` acts first.
SymplecticTransform compose(const SymplecticTransform& outer, const SymplecticTransform& inner);

/// sigma -> S sigma S^T. The result is symmetrized exactly.
CovarianceMatrix apply(const SymplecticTransform& s, const CovarianceMatrix& sigma);

/// Rows and columns of the kept modes, in the order given.
CovarianceMatrix reduce(const CovarianceMatrix& sigma, const ModeSelection& keep);

/// Relabels modes so that new mode k is old mode order[k].
CovarianceMatrix permute(const CovarianceMatrix& sigma, const ModeSelection& order);
SymplecticTransform permute(const SymplecticTransform& s, const ModeSelection& order);

struct SymplecticCheck {
  bool symplectic;
  /// max |(S J S^T - J)_ab|, unscaled.
  double residual;
};

/// Passes when the residual is within kAlgebraicTolerance * max(1, max|S|^2).
SymplecticCheck is_symplectic(const SymplecticTransform& s);

struct PhysicalityCheck {
  bool physical;
  /// Smallest symplectic eigenvalue minus 1 (one or two modes) or the
  /// smallest LDL pivot of sigma + iJ (three or more modes).
  double margin;
};

/// Uncertainty-principle test sigma + iJ >= 0.
PhysicalityCheck is_physical(const CovarianceMatrix& sigma);

}  // namespace cvb
