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

#ifndef SPECTATOR_PROPAGATOR_HPP
#define SPECTATOR_PROPAGATOR_HPP

#include <Eigen/Dense>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "spectator/device.hpp"
#include "spectator/eigensystem.hpp"
#include "spectator/hilbert.hpp"
#include "spectator/schedule.hpp"

namespace spectator {

inline constexpr size_t kDefaultCacheBytes = size_t{1} << 30;

/// Exact step propagators exp(-2 pi i H t) for one device and truncation,
/// with eigensystems cached by the exact bias tuple (LRU, bounded in bytes).
/// Safe to share between threads.
class Propagator {
   public:
    Propagator(DeviceGraph device, int levels, size_t cache_bytes = kDefaultCacheBytes);

    const DeviceGraph &device() const {
        return device_;
    }
    const ModeBasis &basis() const {
        return basis_;
    }
    int levels() const {
        return levels_;
    }

    std::shared_ptr<const Eigensystem> eigensystem(const FluxPoint &flux);
    void step(const FluxPoint &flux, double t, Eigen::MatrixXcd &states, bool adjoint = false);
    void run(const std::vector<ScheduleStep> &steps, Eigen::MatrixXcd &states);
    /// Applies the inverse of `run`: steps in reverse order, each adjointed.
    void run_inverse(const std::vector<ScheduleStep> &steps, Eigen::MatrixXcd &states);

    size_t solves() const;

   private:
    using Key = std::vector<double>;
    Key key_of(const FluxPoint &flux) const;

    DeviceGraph device_;
    int levels_;
    ModeBasis basis_;
    size_t cache_bytes_;
    std::vector<std::string> tunable_;

    mutable std::mutex mutex_;
    std::list<Key> order_;  // front = most recent
    struct Slot {
        std::shared_ptr<const Eigensystem> eig;
        std::list<Key>::iterator pos;
    };
    std::map<Key, Slot> cache_;
    size_t held_bytes_ = 0;
    size_t solves_ = 0;
};

}  // namespace spectator

#endif
