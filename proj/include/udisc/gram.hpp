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

#include "udisc/statemodel.hpp"

namespace udisc {

/// Dense Hermitian PSD matrix of pairwise overlaps between the generating
/// vectors of all states, partitioned per state. Blocks are ordered by state
/// index, then by ensemble index within the state.
struct BlockGram {
  std::vector<int> blocks;  // partition sizes n_k
  ComplexMatrix mat;        // (sum n_k)^2

  int block_count() const { return static_cast<int>(blocks.size()); }
  int total_dim() const;
  int block_offset(int k) const;
  ComplexMatrix block(int k, int l) const;
};

/// Block-diagonal Hermitian PSD matrix matching a BlockGram partition.
struct QuasiDiagonal {
  std::vector<ComplexMatrix> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  std::vector<int> partition() const;
  ComplexMatrix assemble() const;
  double trace() const;
};

BlockGram build_block_gram(const std::vector<Ensemble>& ensembles);

/// Conjugate each block row/column by per-state unitaries: the overlap
/// matrix of the rotated ensembles. Diagonal block traces are preserved.
BlockGram apply_unitary_freedom(const BlockGram& x,
                                const std::vector<ComplexMatrix>& rotations);

/// The failure-part overlap matrix: x.mat minus the assembled quasi-diagonal.
ComplexMatrix residual(const BlockGram& x, const QuasiDiagonal& y);

void require_same_partition(const BlockGram& x, const QuasiDiagonal& y, const char* where);

}  // namespace udisc
