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

#include <vector>

#include "udisc/numerics.hpp"

namespace udisc {

/// Hermitian, PSD, unit-trace matrix. Construct through validate_density.
struct DensityMatrix {
  int dim = 0;
  ComplexMatrix mat;
};

/// Ordered list of nonnormalized vectors whose outer products sum to a
/// density matrix.
struct Ensemble {
  int ambient_dim = 0;
  std::vector<ComplexVector> vectors;

  int count() const { return static_cast<int>(vectors.size()); }
  ComplexMatrix as_columns() const;  // ambient_dim x count
  ComplexMatrix assemble() const;    // sum of outer products
};

struct UDProblem {
  std::vector<DensityMatrix> states;
  std::vector<double> priors;

  int dim() const { return states.empty() ? 0 : states.front().dim; }
  int state_count() const { return static_cast<int>(states.size()); }
};

/// Checks Hermiticity, unit trace and positivity; the error message lists
/// every violated condition, the code reports the first one.
DensityMatrix validate_density(const ComplexMatrix& mat);

/// Eigen-ensemble of a state: vectors sqrt(lambda_i) v_i for eigenvalues
/// above rank_tol * lambda_max, ordered by decreasing eigenvalue.
Ensemble spectral_ensemble(const DensityMatrix& rho, double rank_tol = kRankTol);

/// Orthogonal projector onto the support (range) of rho.
ComplexMatrix support_projector(const DensityMatrix& rho);

/// Dimension of supp(rho1) intersect supp(rho2), via the singular values of
/// the product of the two support projectors (count of values ~ 1).
int support_intersection_dim(const DensityMatrix& rho1, const DensityMatrix& rho2);

UDProblem make_problem(std::vector<DensityMatrix> states, std::vector<double> priors);

/// The standard two rank-2 states on C^4: each state is an equal mixture of
/// two orthogonal unit vectors, cross overlaps cos1 and cos2 between matched
/// vectors, zero otherwise.
std::pair<DensityMatrix, DensityMatrix> make_two_subspace_states(double cos1, double cos2);

}  // namespace udisc
