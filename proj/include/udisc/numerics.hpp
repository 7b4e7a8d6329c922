// Copyright 2026 The udisc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "udisc/error.hpp"

namespace udisc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Shared tolerances. Rank decisions are always relative to the largest
// eigenvalue / singular value; PSD slack is relative to the spectral norm.
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kRankTol = 1e-10;
inline constexpr double kHermTol = 1e-10;

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
/// Eigenvector phases are fixed (first significant component real positive)
/// so repeated calls on identical input give identical output.
struct HermEig {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // unitary, columns are eigenvectors
};

/// Full SVD, singular values descending.
struct SvdResult {
  ComplexMatrix left;   // m x m unitary
  RealVector singulars; // min(m,n), descending, nonnegative
  ComplexMatrix right;  // n x n unitary, M = left * diag(singulars) * right^dag
};

bool is_finite(const ComplexMatrix& m);
double hermiticity_residual(const ComplexMatrix& m);  // max entry of |M - M^dag|

/// Multiply each column by a unit phase so its first significant entry is
/// real and positive. Deterministic tie-breaking for degenerate subspaces.
void fix_column_phases(ComplexMatrix& m);

HermEig hermitian_eig(const ComplexMatrix& h);
SvdResult svd(const ComplexMatrix& m);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& h);

/// Rank-revealing factor L with H = L L^dag; L has rank(H, tol) columns,
/// ordered by decreasing eigenvalue.
ComplexMatrix psd_factor(const ComplexMatrix& h, double tol = kPsdTol);

/// Hermitian PSD square root, S^2 = H.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& h);

/// Count of values strictly above tol * max(values). Zero if max <= 0.
int numerical_rank(const RealVector& values, double tol = kRankTol);

/// Extend the orthonormal columns of q (dim x k) to a dim x dim unitary.
/// Completion columns are produced by Gram-Schmidt against standard basis
/// vectors with deterministic pivoting and phase fixing.
ComplexMatrix complete_orthonormal_basis(const ComplexMatrix& q, int dim);

}  // namespace udisc
