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

#include "udisc/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace udisc {

namespace {

void require_finite(const ComplexMatrix& m, const char* where) {
  if (!is_finite(m)) {
    throw Error(ErrorCode::NonFinite, std::string(where) + ": input has NaN/Inf entries");
  }
}

void require_square(const ComplexMatrix& m, const char* where) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(where) + ": matrix is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", expected square");
  }
}

void require_hermitian(const ComplexMatrix& m, const char* where) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double resid = hermiticity_residual(m);
  if (resid > kHermTol * scale) {
    throw Error(ErrorCode::NonHermitian,
                std::string(where) + ": symmetry residual " + std::to_string(resid));
  }
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::NotPsd: return "NotPsd";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::InvalidOverlap: return "InvalidOverlap";
    case ErrorCode::InvalidAngles: return "InvalidAngles";
    case ErrorCode::InvalidPriors: return "InvalidPriors";
    case ErrorCode::EmptyReduction: return "EmptyReduction";
    case ErrorCode::InfeasiblePair: return "InfeasiblePair";
    case ErrorCode::CompletenessViolation: return "CompletenessViolation";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::SolverError: return "SolverError";
  }
  return "UnknownError";
}

bool is_finite(const ComplexMatrix& m) { return m.allFinite(); }

double hermiticity_residual(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void fix_column_phases(ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const double colmax = m.col(j).cwiseAbs().maxCoeff();
    if (colmax <= 0.0) continue;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex v = m(i, j);
      if (std::abs(v) > 1e-12 * colmax) {
        m.col(j) *= std::conj(v) / std::abs(v);
        break;
      }
    }
  }
}

HermEig hermitian_eig(const ComplexMatrix& h) {
  require_finite(h, "hermitian_eig");
  require_square(h, "hermitian_eig");
  require_hermitian(h, "hermitian_eig");
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "hermitian_eig: eigensolver did not converge");
  }
  HermEig out{es.eigenvalues(), es.eigenvectors()};
  fix_column_phases(out.vectors);
  return out;
}

SvdResult svd(const ComplexMatrix& m) {
  require_finite(m, "svd");
  Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "svd: iteration cap reached");
  }
  SvdResult out{solver.matrixU(), solver.singularValues(), solver.matrixV()};
  const Eigen::Index k = std::min(m.rows(), m.cols());
  // A shared phase on paired singular vectors leaves the product invariant;
  // fix it from the left vector.
  for (Eigen::Index j = 0; j < k; ++j) {
    const double colmax = out.left.col(j).cwiseAbs().maxCoeff();
    if (colmax <= 0.0) continue;
    for (Eigen::Index i = 0; i < out.left.rows(); ++i) {
      const Complex v = out.left(i, j);
      if (std::abs(v) > 1e-12 * colmax) {
        const Complex phase = std::conj(v) / std::abs(v);
        out.left.col(j) *= phase;
        out.right.col(j) *= phase;
        break;
      }
    }
  }
  // Columns beyond min(m,n) never touch the reconstruction.
  if (out.left.cols() > k) {
    ComplexMatrix tail = out.left.rightCols(out.left.cols() - k);
    fix_column_phases(tail);
    out.left.rightCols(out.left.cols() - k) = tail;
  }
  if (out.right.cols() > k) {
    ComplexMatrix tail = out.right.rightCols(out.right.cols() - k);
    fix_column_phases(tail);
    out.right.rightCols(out.right.cols() - k) = tail;
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& h) {
  require_finite(h, "min_eigenvalue");
  require_square(h, "min_eigenvalue");
  require_hermitian(h, "min_eigenvalue");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (h + h.adjoint()),
                                                  Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

int numerical_rank(const RealVector& values, double tol) {
  if (values.size() == 0) return 0;
  const double vmax = values.maxCoeff();
  if (vmax <= 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) > tol * vmax) ++rank;
  }
  return rank;
}

ComplexMatrix psd_factor(const ComplexMatrix& h, double tol) {
  const HermEig eig = hermitian_eig(h);
  const Eigen::Index n = eig.values.size();
  const double scale = std::max(std::abs(eig.values(0)), std::abs(eig.values(n - 1)));
  if (eig.values(0) < -tol * std::max(1.0, scale)) {
    throw Error(ErrorCode::NotPsd,
                "psd_factor: min eigenvalue " + std::to_string(eig.values(0)));
  }
  const int rank = numerical_rank(eig.values, tol);
  ComplexMatrix factor(n, rank);
  for (int j = 0; j < rank; ++j) {
    const Eigen::Index src = n - 1 - j;  // descending
    factor.col(j) = std::sqrt(std::max(0.0, eig.values(src))) * eig.vectors.col(src);
  }
  return factor;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& h) {
  const HermEig eig = hermitian_eig(h);
  const Eigen::Index n = eig.values.size();
  const double scale = std::max(std::abs(eig.values(0)), std::abs(eig.values(n - 1)));
  if (eig.values(0) < -kPsdTol * std::max(1.0, scale)) {
    throw Error(ErrorCode::NotPsd,
                "matrix_sqrt_psd: min eigenvalue " + std::to_string(eig.values(0)));
  }
  RealVector roots(n);
  for (Eigen::Index i = 0; i < n; ++i) roots(i) = std::sqrt(std::max(0.0, eig.values(i)));
  ComplexMatrix s = eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
  return 0.5 * (s + s.adjoint());
}

ComplexMatrix complete_orthonormal_basis(const ComplexMatrix& q, int dim) {
  if (q.rows() != dim) {
    throw Error(ErrorCode::DimensionMismatch, "complete_orthonormal_basis: row count");
  }
  ComplexMatrix full(dim, dim);
  Eigen::Index have = q.cols();
  full.leftCols(have) = q;
  while (have < dim) {
    // Pick the standard basis vector with the largest residual; stable under
    // reordering-free input so results are reproducible.
    double best = -1.0;
    ComplexVector bestResidual;
    for (int j = 0; j < dim; ++j) {
      ComplexVector e = ComplexVector::Zero(dim);
      e(j) = 1.0;
      ComplexVector r = e - full.leftCols(have) * (full.leftCols(have).adjoint() * e);
      const double norm = r.norm();
      if (norm > best + 1e-12) {
        best = norm;
        bestResidual = r;
      }
    }
    // Second orthogonalization pass tightens loss from cancellation.
    bestResidual -= full.leftCols(have) * (full.leftCols(have).adjoint() * bestResidual);
    bestResidual.normalize();
    ComplexMatrix col = bestResidual;
    fix_column_phases(col);
    full.col(have) = col;
    ++have;
  }
  return full;
}

}  // namespace udisc
