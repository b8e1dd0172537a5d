// Copyright 2026 The Qudest Authors
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

#pragma once

#include <vector>

#include "qudest/core/weyl_heisenberg.h"

namespace qudest {

/// Z_d² = S0 ∪ Su ∪ S+ ∪ S−. Su holds the self-paired indexes (p = ⊖p, p ≠ 0),
/// S+ the lexicographically smaller member of each remaining {p, ⊖p} pair, and
/// minus[i] is ⊖plus[i]. All lists are sorted.
struct PartitionSets {
    int d = 0;
    std::vector<WHIndex> unpaired;
    std::vector<WHIndex> plus;
    std::vector<WHIndex> minus;

    /// 0 for S0, 1 for Su, 2 for S+, 3 for S−.
    int category(WHIndex n) const;
};

PartitionSets partition_indices(int d);

}  // namespace qudest
