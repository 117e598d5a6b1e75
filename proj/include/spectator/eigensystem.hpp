// Copyright 2026 The spectator Authors
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

#ifndef SPECTATOR_EIGENSYSTEM_HPP
#define SPECTATOR_EIGENSYSTEM_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "spectator/hilbert.hpp"

namespace spectator {

/// Eigenpairs of one invariant subspace. `indices` are basis positions.
struct EigenBlock {
    std::vector<Eigen::Index> indices;
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;  // columns, local coordinates
};

/// Full spectrum assembled from blocks. Eigen index k runs over ascending
/// energy. Each vector's largest-magnitude component is positive.
class Eigensystem {
   public:
    Eigensystem() = default;
    Eigensystem(size_t dimension, std::vector<EigenBlock> blocks);

    size_t dimension() const {
        return dimension_;
    }
    const Eigen::VectorXd &values() const {
        return values_;
    }
    const std::vector<EigenBlock> &blocks() const {
        return blocks_;
    }
    /// (block, column) of eigen index k.
    std::pair<size_t, Eigen::Index> locate(size_t k) const {
        return where_[k];
    }
    Eigen::VectorXd vector(size_t k) const;
    size_t bytes() const;

    /// states <- exp(-2 pi i H t) states, t in ns. With `adjoint` the sign of
    /// the phase flips.
    void apply(double t, Eigen::MatrixXcd &states, bool adjoint = false) const;

   private:
    size_t dimension_ = 0;
    std::vector<EigenBlock> blocks_;
    Eigen::VectorXd values_;
    std::vector<std::pair<size_t, Eigen::Index>> where_;
};

/// Diagonalizes the even and odd total-excitation sectors separately. The
/// coupling (a+a^dag)(b+b^dag) changes the excitation count by 0 or 2, so
/// the split is exact.
Eigensystem diagonalize(const HamiltonianMatrix &h);

/// Single dense solve of a symmetric matrix.
Eigensystem diagonalize_dense(const Eigen::MatrixXd &matrix);

/// Solve on caller-supplied invariant subspaces.
Eigensystem diagonalize_blocks(const Eigen::MatrixXd &matrix, const std::vector<std::vector<Eigen::Index>> &blocks);

}  // namespace spectator

#endif
