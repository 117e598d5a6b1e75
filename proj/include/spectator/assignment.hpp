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

#ifndef SPECTATOR_ASSIGNMENT_HPP
#define SPECTATOR_ASSIGNMENT_HPP

#include <Eigen/Dense>
#include <vector>

namespace spectator {

/// Exact maximum-weight perfect matching on a square weight matrix
/// (Hungarian method, O(n^3)). Returns the column matched to each row.
/// Ties resolve the same way on every run; earlier rows and columns win.
std::vector<int> max_weight_assignment(const Eigen::MatrixXd &weight);

}  // namespace spectator

#endif
