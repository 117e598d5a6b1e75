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

#include "spectator/eigensystem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include "spectator/errors.hpp"

namespace spectator {

namespace {

void fix_gauge(Eigen::MatrixXd &vectors) {
    for (Eigen::Index c = 0; c < vectors.cols(); c++) {
        Eigen::Index best = 0;
        double mag = -1;
        for (Eigen::Index r = 0; r < vectors.rows(); r++) {
            // Strictly greater keeps the lowest index among equal magnitudes.
            if (std::abs(vectors(r, c)) > mag + 1e-12) {
                mag = std::abs(vectors(r, c));
                best = r;
            }
        }
        if (vectors(best, c) < 0) {
            vectors.col(c) *= -1.0;
        }
    }
}

EigenBlock solve_block(const Eigen::MatrixXd &matrix, std::vector<Eigen::Index> indices) {
    auto n = static_cast<Eigen::Index>(indices.size());
    Eigen::MatrixXd sub(n, n);
    for (Eigen::Index r = 0; r < n; r++) {
        for (Eigen::Index c = 0; c < n; c++) {
            sub(r, c) = matrix(indices[r], indices[c]);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sub);
    if (solver.info() != Eigen::Success) {
        throw PhysicsError("eigensolver did not converge");
    }
    EigenBlock out{std::move(indices), solver.eigenvalues(), solver.eigenvectors()};
    fix_gauge(out.vectors);
    return out;
}

}  // namespace

Eigensystem::Eigensystem(size_t dimension, std::vector<EigenBlock> blocks)
    : dimension_(dimension), blocks_(std::move(blocks)) {
    std::vector<std::tuple<double, size_t, Eigen::Index>> order;
    for (size_t b = 0; b < blocks_.size(); b++) {
        for (Eigen::Index c = 0; c < blocks_[b].values.size(); c++) {
            order.emplace_back(blocks_[b].values[c], b, c);
        }
    }
    if (order.size() != dimension_) {
        throw ValidationError("eigen blocks do not cover the space");
    }
    std::sort(order.begin(), order.end());
    values_.resize(static_cast<Eigen::Index>(dimension_));
    where_.resize(dimension_);
    for (size_t k = 0; k < order.size(); k++) {
        values_[static_cast<Eigen::Index>(k)] = std::get<0>(order[k]);
        where_[k] = {std::get<1>(order[k]), std::get<2>(order[k])};
    }
}

Eigen::VectorXd Eigensystem::vector(size_t k) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dimension_));
    const auto &[b, c] = where_[k];
    const auto &block = blocks_[b];
    for (size_t r = 0; r < block.indices.size(); r++) {
        out[block.indices[r]] = block.vectors(static_cast<Eigen::Index>(r), c);
    }
    return out;
}

size_t Eigensystem::bytes() const {
    size_t total = sizeof(*this) + where_.size() * sizeof(where_[0]) + values_.size() * sizeof(double);
    for (const auto &b : blocks_) {
        total += b.indices.size() * (sizeof(Eigen::Index) + sizeof(double)) + b.vectors.size() * sizeof(double);
    }
    return total;
}

void Eigensystem::apply(double t, Eigen::MatrixXcd &states, bool adjoint) const {
    if (static_cast<size_t>(states.rows()) != dimension_) {
        throw ValidationError("state dimension does not match the Hamiltonian");
    }
    const double sign = adjoint ? 1.0 : -1.0;
    const Eigen::Index cols = states.cols();
    for (const auto &block : blocks_) {
        auto n = static_cast<Eigen::Index>(block.indices.size());
        Eigen::MatrixXd re(n, cols);
        Eigen::MatrixXd im(n, cols);
        for (Eigen::Index r = 0; r < n; r++) {
            for (Eigen::Index c = 0; c < cols; c++) {
                re(r, c) = states(block.indices[r], c).real();
                im(r, c) = states(block.indices[r], c).imag();
            }
        }
        Eigen::MatrixXd cr = block.vectors.transpose() * re;
        Eigen::MatrixXd ci = block.vectors.transpose() * im;
        for (Eigen::Index k = 0; k < n; k++) {
            double angle = sign * 2.0 * std::numbers::pi * block.values[k] * t;
            double cs = std::cos(angle);
            double sn = std::sin(angle);
            for (Eigen::Index c = 0; c < cols; c++) {
                double a = cr(k, c);
                double b = ci(k, c);
                cr(k, c) = a * cs - b * sn;
                ci(k, c) = a * sn + b * cs;
            }
        }
        re.noalias() = block.vectors * cr;
        im.noalias() = block.vectors * ci;
        for (Eigen::Index r = 0; r < n; r++) {
            for (Eigen::Index c = 0; c < cols; c++) {
                states(block.indices[r], c) = {re(r, c), im(r, c)};
            }
        }
    }
}

Eigensystem diagonalize_blocks(const Eigen::MatrixXd &matrix, const std::vector<std::vector<Eigen::Index>> &blocks) {
    std::vector<EigenBlock> solved;
    for (const auto &indices : blocks) {
        if (!indices.empty()) {
            solved.push_back(solve_block(matrix, indices));
        }
    }
    return Eigensystem(static_cast<size_t>(matrix.rows()), std::move(solved));
}

Eigensystem diagonalize_dense(const Eigen::MatrixXd &matrix) {
    std::vector<Eigen::Index> all(static_cast<size_t>(matrix.rows()));
    for (size_t k = 0; k < all.size(); k++) {
        all[k] = static_cast<Eigen::Index>(k);
    }
    return diagonalize_blocks(matrix, {all});
}

Eigensystem diagonalize(const HamiltonianMatrix &h) {
    std::vector<std::vector<Eigen::Index>> parity(2);
    for (size_t s = 0; s < h.basis.dimension(); s++) {
        parity[h.basis.excitations(s) % 2].push_back(static_cast<Eigen::Index>(s));
    }
    return diagonalize_blocks(h.matrix, parity);
}

}  // namespace spectator
