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

#include "qudest/estimation/partition.h"

#include <algorithm>

#include "qudest/core/error.h"

namespace qudest {

int PartitionSets::category(WHIndex n) const {
    n = WHIndex::reduced(n.x, n.z, d);
    if (n.is_zero()) {
        return 0;
    }
    if (n == n.negated(d)) {
        return 1;
    }
    return n < n.negated(d) ? 2 : 3;
}

PartitionSets partition_indices(int d) {
    if (d < 2) {
        throw Error(ErrorCode::kInvalidDimension, "dimension must be >= 2");
    }
    PartitionSets out;
    out.d = d;
    for (int k = 1; k < d * d; ++k) {
        WHIndex n = WHIndex::from_flat(k, d);
        WHIndex m = n.negated(d);
        if (n == m) {
            out.unpaired.push_back(n);
        } else if (n < m) {
            out.plus.push_back(n);
            out.minus.push_back(m);
        }
    }
    return out;
}

}  // namespace qudest
