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

#include "spectator/propagator.hpp"

#include "spectator/errors.hpp"

namespace spectator {

Propagator::Propagator(DeviceGraph device, int levels, size_t cache_bytes)
    : device_(std::move(device)), levels_(levels), basis_(make_basis(device_, levels)), cache_bytes_(cache_bytes) {
    for (const auto &n : device_.nodes()) {
        if (n.tunable) {
            tunable_.push_back(n.label);
        }
    }
}

Propagator::Key Propagator::key_of(const FluxPoint &flux) const {
    Key key;
    key.reserve(tunable_.size());
    for (const auto &label : tunable_) {
        key.push_back(flux.at(label));
    }
    return key;
}

std::shared_ptr<const Eigensystem> Propagator::eigensystem(const FluxPoint &flux) {
    Key key = key_of(flux);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            order_.splice(order_.begin(), order_, it->second.pos);
            return it->second.eig;
        }
    }
    auto eig = std::make_shared<const Eigensystem>(diagonalize(build_hamiltonian(device_, flux, levels_)));
    std::lock_guard<std::mutex> lock(mutex_);
    solves_++;
    auto it = cache_.find(key);
    if (it != cache_.end()) {
        return it->second.eig;
    }
    order_.push_front(key);
    cache_.emplace(key, Slot{eig, order_.begin()});
    held_bytes_ += eig->bytes();
    while (held_bytes_ > cache_bytes_ && order_.size() > 1) {
        auto victim = cache_.find(order_.back());
        held_bytes_ -= victim->second.eig->bytes();
        cache_.erase(victim);
        order_.pop_back();
    }
    return eig;
}

void Propagator::step(const FluxPoint &flux, double t, Eigen::MatrixXcd &states, bool adjoint) {
    eigensystem(flux)->apply(t, states, adjoint);
}

void Propagator::run(const std::vector<ScheduleStep> &steps, Eigen::MatrixXcd &states) {
    for (const auto &s : steps) {
        step(s.flux, s.length, states);
    }
}

void Propagator::run_inverse(const std::vector<ScheduleStep> &steps, Eigen::MatrixXcd &states) {
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        step(it->flux, it->length, states, true);
    }
}

size_t Propagator::solves() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return solves_;
}

}  // namespace spectator
