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

#include "udisc/gram.hpp"

#include <numeric>

namespace udisc {

int BlockGram::total_dim() const {
  return std::accumulate(blocks.begin(), blocks.end(), 0);
}

int BlockGram::block_offset(int k) const {
  int off = 0;
  for (int i = 0; i < k; ++i) off += blocks[i];
  return off;
}

ComplexMatrix BlockGram::block(int k, int l) const {
  return mat.block(block_offset(k), block_offset(l), blocks[k], blocks[l]);
}

std::vector<int> QuasiDiagonal::partition() const {
  std::vector<int> p;
  p.reserve(blocks.size());
  for (const auto& b : blocks) p.push_back(static_cast<int>(b.rows()));
  return p;
}

ComplexMatrix QuasiDiagonal::assemble() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.rows());
  ComplexMatrix full = ComplexMatrix::Zero(n, n);
  int off = 0;
  for (const auto& b : blocks) {
    full.block(off, off, b.rows(), b.cols()) = b;
    off += static_cast<int>(b.rows());
  }
  return full;
}

double QuasiDiagonal::trace() const {
  double t = 0.0;
  for (const auto& b : blocks) t += b.trace().real();
  return t;
}

void require_same_partition(const BlockGram& x, const QuasiDiagonal& y, const char* where) {
  if (y.block_count() != x.block_count()) {
    throw Error(ErrorCode::PartitionMismatch,
                std::string(where) + ": block counts differ");
  }
  for (int k = 0; k < x.block_count(); ++k) {
    if (y.blocks[k].rows() != x.blocks[k] || y.blocks[k].cols() != x.blocks[k]) {
      throw Error(ErrorCode::PartitionMismatch,
                  std::string(where) + ": block " + std::to_string(k) + " shape");
    }
  }
}

BlockGram build_block_gram(const std::vector<Ensemble>& ensembles) {
  if (ensembles.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "build_block_gram: no ensembles");
  }
  const int dim = ensembles.front().ambient_dim;
  int n = 0;
  for (const auto& e : ensembles) {
    if (e.ambient_dim != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "build_block_gram: ensembles differ in ambient dimension");
    }
    n += e.count();
  }
  ComplexMatrix stacked(dim, n);
  std::vector<int> partition;
  int off = 0;
  for (const auto& e : ensembles) {
    partition.push_back(e.count());
    for (const auto& v : e.vectors) stacked.col(off++) = v;
  }
  ComplexMatrix gram = stacked.adjoint() * stacked;
  gram = 0.5 * (gram + gram.adjoint());
  return BlockGram{std::move(partition), std::move(gram)};
}

BlockGram apply_unitary_freedom(const BlockGram& x,
                                const std::vector<ComplexMatrix>& rotations) {
  if (static_cast<int>(rotations.size()) != x.block_count()) {
    throw Error(ErrorCode::PartitionMismatch,
                "apply_unitary_freedom: rotation count != block count");
  }
  const int n = x.total_dim();
  ComplexMatrix big = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < x.block_count(); ++k) {
    const auto& u = rotations[k];
    if (u.rows() != x.blocks[k] || u.cols() != x.blocks[k]) {
      throw Error(ErrorCode::DimensionMismatch,
                  "apply_unitary_freedom: rotation " + std::to_string(k) + " shape");
    }
    const double unit = (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()))
                            .cwiseAbs()
                            .maxCoeff();
    if (unit > 1e-10) {
      throw Error(ErrorCode::NotUnitary,
                  "apply_unitary_freedom: rotation " + std::to_string(k) +
                      " unitarity residual " + std::to_string(unit));
    }
    big.block(x.block_offset(k), x.block_offset(k), x.blocks[k], x.blocks[k]) = u;
  }
  ComplexMatrix rotated = big * x.mat * big.adjoint();
  rotated = 0.5 * (rotated + rotated.adjoint());
  return BlockGram{x.blocks, std::move(rotated)};
}

ComplexMatrix residual(const BlockGram& x, const QuasiDiagonal& y) {
  require_same_partition(x, y, "residual");
  ComplexMatrix b = x.mat - y.assemble();
  return 0.5 * (b + b.adjoint());
}

}  // namespace udisc
