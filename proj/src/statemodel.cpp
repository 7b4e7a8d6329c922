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

#include "udisc/statemodel.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace udisc {

ComplexMatrix Ensemble::as_columns() const {
  ComplexMatrix cols(ambient_dim, count());
  for (int j = 0; j < count(); ++j) cols.col(j) = vectors[j];
  return cols;
}

ComplexMatrix Ensemble::assemble() const {
  const ComplexMatrix cols = as_columns();
  ComplexMatrix rho = cols * cols.adjoint();
  return 0.5 * (rho + rho.adjoint());
}

DensityMatrix validate_density(const ComplexMatrix& mat) {
  if (mat.rows() != mat.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "validate_density: matrix not square");
  }
  if (!is_finite(mat)) {
    throw Error(ErrorCode::NonFinite, "validate_density: NaN/Inf entries");
  }

  std::vector<std::pair<ErrorCode, std::string>> violations;
  const double scale = std::max(1.0, mat.cwiseAbs().maxCoeff());
  const double herm = hermiticity_residual(mat);
  if (herm > kHermTol * scale) {
    violations.emplace_back(ErrorCode::NonHermitian,
                            "symmetry residual " + std::to_string(herm));
  }
  const double trace = mat.trace().real();
  if (std::abs(trace - 1.0) > 1e-10 || std::abs(mat.trace().imag()) > 1e-10) {
    violations.emplace_back(ErrorCode::TraceNotOne, "trace " + std::to_string(trace));
  }
  const ComplexMatrix sym = 0.5 * (mat + mat.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym, Eigen::EigenvaluesOnly);
  const double mineig = es.eigenvalues()(0);
  if (mineig < -1e-10) {
    violations.emplace_back(ErrorCode::NotPsd, "min eigenvalue " + std::to_string(mineig));
  }

  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "validate_density:";
    for (const auto& [code, detail] : violations) {
      msg << " [" << to_string(code) << " " << detail << "]";
    }
    throw Error(violations.front().first, msg.str());
  }
  return DensityMatrix{static_cast<int>(mat.rows()), mat};
}

Ensemble spectral_ensemble(const DensityMatrix& rho, double rank_tol) {
  const HermEig eig = hermitian_eig(rho.mat);
  const Eigen::Index n = eig.values.size();
  const double lmax = eig.values(n - 1);
  Ensemble out;
  out.ambient_dim = rho.dim;
  for (Eigen::Index j = n - 1; j >= 0; --j) {  // descending eigenvalue
    const double lambda = eig.values(j);
    if (lmax <= 0.0 || lambda <= rank_tol * lmax) continue;
    out.vectors.push_back(std::sqrt(lambda) * eig.vectors.col(j));
  }
  return out;
}

ComplexMatrix support_projector(const DensityMatrix& rho) {
  const HermEig eig = hermitian_eig(rho.mat);
  const Eigen::Index n = eig.values.size();
  const double lmax = eig.values(n - 1);
  ComplexMatrix proj = ComplexMatrix::Zero(rho.dim, rho.dim);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (lmax > 0.0 && eig.values(j) > kRankTol * lmax) {
      proj += eig.vectors.col(j) * eig.vectors.col(j).adjoint();
    }
  }
  return 0.5 * (proj + proj.adjoint());
}

int support_intersection_dim(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (rho1.dim != rho2.dim) {
    throw Error(ErrorCode::DimensionMismatch, "support_intersection_dim: dims differ");
  }
  const ComplexMatrix p1 = support_projector(rho1);
  const ComplexMatrix p2 = support_projector(rho2);
  const SvdResult dec = svd(p1 * p2);
  int count = 0;
  for (Eigen::Index i = 0; i < dec.singulars.size(); ++i) {
    if (dec.singulars(i) >= 1.0 - 1e-8) ++count;
  }
  return count;
}

UDProblem make_problem(std::vector<DensityMatrix> states, std::vector<double> priors) {
  if (states.empty()) {
    throw Error(ErrorCode::ValidationError, "make_problem: no states");
  }
  if (states.size() != priors.size()) {
    throw Error(ErrorCode::InvalidPriors, "make_problem: priors count != state count");
  }
  const int dim = states.front().dim;
  for (const auto& s : states) {
    if (s.dim != dim) {
      throw Error(ErrorCode::DimensionMismatch, "make_problem: states differ in dimension");
    }
  }
  double sum = 0.0;
  for (double p : priors) {
    if (!(p > 0.0)) {
      throw Error(ErrorCode::InvalidPriors, "make_problem: prior " + std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidPriors, "make_problem: priors sum " + std::to_string(sum));
  }
  return UDProblem{std::move(states), std::move(priors)};
}

std::pair<DensityMatrix, DensityMatrix> make_two_subspace_states(double cos1, double cos2) {
  if (!(cos1 > 0.0 && cos1 < 1.0 && cos2 > 0.0 && cos2 < 1.0)) {
    throw Error(ErrorCode::InvalidAngles,
                "make_two_subspace_states: overlaps must lie in (0,1)");
  }
  ComplexVector r1 = ComplexVector::Zero(4), r2 = ComplexVector::Zero(4);
  ComplexVector s1 = ComplexVector::Zero(4), s2 = ComplexVector::Zero(4);
  r1(0) = 1.0;
  r2(1) = 1.0;
  s1(0) = cos1;
  s1(2) = std::sqrt(1.0 - cos1 * cos1);
  s2(1) = cos2;
  s2(3) = std::sqrt(1.0 - cos2 * cos2);
  const ComplexMatrix rho1 = 0.5 * (r1 * r1.adjoint() + r2 * r2.adjoint());
  const ComplexMatrix rho2 = 0.5 * (s1 * s1.adjoint() + s2 * s2.adjoint());
  return {validate_density(rho1), validate_density(rho2)};
}

}  // namespace udisc
