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

#include <optional>

#include "udisc/gram.hpp"

namespace udisc {

/// Simultaneous decomposition of two states into generating vectors whose
/// only nonzero cross overlaps are <r_m|s_m> = f_m. The f_m are the
/// singular values of the cross-overlap block; their sum is the fidelity.
struct CanonicalPair {
  std::vector<ComplexVector> r_vectors;  // generate rho1
  std::vector<ComplexVector> s_vectors;  // generate rho2
  RealVector f;                          // min(u,v), descending
  int t = 0;                             // count of f above rank threshold
  RealVector r_norms;                    // squared norms <r_m|r_m>
  RealVector s_norms;                    // squared norms <s_m|s_m>
};

CanonicalPair canonical_pair(const DensityMatrix& rho1, const DensityMatrix& rho2,
                             double rank_tol = kRankTol);

/// Fidelity as the sum of canonical singular values.
double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Fidelity evaluated from its definition, trace of the PSD square root of
/// sqrt(rho1) rho2 sqrt(rho1). Independent route used for cross-checking.
double fidelity_direct(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// The 2t x 2t overlap matrix of the paired canonical vectors, partition
/// (t, t); the off-diagonal block is diag(f_1..f_t).
BlockGram reduced_gram(const CanonicalPair& pair);

/// Discrimination between two states restricted to the paired canonical
/// vectors. Mass outside the pairing is identified with certainty and is
/// accounted in `leftover`.
struct ReducedProblem {
  std::optional<DensityMatrix> rho1;  // unset when empty
  std::optional<DensityMatrix> rho2;
  double n1 = 0.0;        // paired mass of state 1
  double n2 = 0.0;        // paired mass of state 2
  double leftover = 0.0;  // eta1 (1 - n1) + eta2 (1 - n2)
  bool empty = false;     // t == 0: states perfectly distinguishable
  CanonicalPair pair;
};

ReducedProblem reduce_two_state_problem(const DensityMatrix& rho1,
                                        const DensityMatrix& rho2, double eta1,
                                        double eta2);

}  // namespace udisc
