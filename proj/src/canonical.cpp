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

#include "udisc/canonical.hpp"

#include <cmath>

namespace udisc {

CanonicalPair canonical_pair(const DensityMatrix& rho1, const DensityMatrix& rho2,
                             double rank_tol) {
  if (rho1.dim != rho2.dim) {
    throw Error(ErrorCode::DimensionMismatch, "canonical_pair: dims differ");
  }
  const Ensemble e1 = spectral_ensemble(rho1, rank_tol);
  const Ensemble e2 = spectral_ensemble(rho2, rank_tol);
  const ComplexMatrix psi1 = e1.as_columns();  // d x u
  const ComplexMatrix psi2 = e2.as_columns();  // d x v

  // Cross-overlap block of the spectral ensembles; rotating each ensemble by
  // the singular bases diagonalizes every cross overlap at once.
  const ComplexMatrix a = psi1.adjoint() * psi2;  // u x v
  const SvdResult dec = svd(a);

  const ComplexMatrix r = psi1 * dec.left;   // columns are the new vectors
  const ComplexMatrix s = psi2 * dec.right;

  CanonicalPair out;
  out.f = dec.singulars;
  const double fmax = out.f.size() ? out.f.maxCoeff() : 0.0;
  out.t = 0;
  for (Eigen::Index i = 0; i < out.f.size(); ++i) {
    if (out.f(i) > rank_tol * std::max(1.0, fmax)) ++out.t;
  }
  out.r_vectors.reserve(r.cols());
  out.s_vectors.reserve(s.cols());
  out.r_norms.resize(r.cols());
  out.s_norms.resize(s.cols());
  for (Eigen::Index j = 0; j < r.cols(); ++j) {
    out.r_vectors.push_back(r.col(j));
    out.r_norms(j) = r.col(j).squaredNorm();
  }
  for (Eigen::Index j = 0; j < s.cols(); ++j) {
    out.s_vectors.push_back(s.col(j));
    out.s_norms(j) = s.col(j).squaredNorm();
  }
  return out;
}

double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  const CanonicalPair pair = canonical_pair(rho1, rho2);
  return pair.f.sum();
}

double fidelity_direct(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (rho1.dim != rho2.dim) {
    throw Error(ErrorCode::DimensionMismatch, "fidelity_direct: dims differ");
  }
  const ComplexMatrix root1 = matrix_sqrt_psd(rho1.mat);
  ComplexMatrix inner = root1 * rho2.mat * root1;
  inner = 0.5 * (inner + inner.adjoint());
  return matrix_sqrt_psd(inner).trace().real();
}

BlockGram reduced_gram(const CanonicalPair& pair) {
  const int t = pair.t;
  if (t < 1) {
    throw Error(ErrorCode::EmptyReduction, "reduced_gram: no paired vectors");
  }
  const int d = static_cast<int>(pair.r_vectors.front().size());
  ComplexMatrix r(d, t), s(d, t);
  for (int j = 0; j < t; ++j) {
    r.col(j) = pair.r_vectors[j];
    s.col(j) = pair.s_vectors[j];
  }
  ComplexMatrix mat = ComplexMatrix::Zero(2 * t, 2 * t);
  ComplexMatrix g1 = r.adjoint() * r;
  ComplexMatrix g2 = s.adjoint() * s;
  mat.topLeftCorner(t, t) = 0.5 * (g1 + g1.adjoint());
  mat.bottomRightCorner(t, t) = 0.5 * (g2 + g2.adjoint());
  for (int j = 0; j < t; ++j) {
    mat(j, t + j) = pair.f(j);
    mat(t + j, j) = pair.f(j);
  }
  return BlockGram{{t, t}, std::move(mat)};
}

ReducedProblem reduce_two_state_problem(const DensityMatrix& rho1,
                                        const DensityMatrix& rho2, double eta1,
                                        double eta2) {
  ReducedProblem out;
  out.pair = canonical_pair(rho1, rho2);
  const int t = out.pair.t;
  if (t == 0) {
    out.empty = true;
    out.leftover = eta1 + eta2;
    return out;
  }
  out.n1 = out.pair.r_norms.head(t).sum();
  out.n2 = out.pair.s_norms.head(t).sum();
  out.leftover = eta1 * (1.0 - out.n1) + eta2 * (1.0 - out.n2);

  const int d = rho1.dim;
  ComplexMatrix m1 = ComplexMatrix::Zero(d, d), m2 = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < t; ++j) {
    m1 += out.pair.r_vectors[j] * out.pair.r_vectors[j].adjoint();
    m2 += out.pair.s_vectors[j] * out.pair.s_vectors[j].adjoint();
  }
  out.rho1 = validate_density(0.5 * (m1 + m1.adjoint()) / out.n1);
  out.rho2 = validate_density(0.5 * (m2 + m2.adjoint()) / out.n2);
  return out;
}

}  // namespace udisc
