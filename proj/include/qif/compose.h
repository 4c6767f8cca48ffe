// Copyright 2026 The topics-qif Authors
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

#ifndef TOPICSQIF_QIF_COMPOSE_H_
#define TOPICSQIF_QIF_COMPOSE_H_

#include "qif/types.h"

namespace qif {

// Matrix product: run `first`, feed its output into `second`. Requires
// first's column labels to equal second's row labels.
Channel Cascade(const Channel& first, const Channel& second);

// Hidden coin flip: with probability 1-r behave as `a`, with probability r
// as `b`; the observer sees only the merged output. Columns are a's in
// order, then b-only columns in b's order.
Channel InternalChoice(const Channel& a, const Channel& b, double r);

// Visible coin flip: as InternalChoice but the observer also learns which
// branch ran. Columns are the tagged disjoint union of both output sets.
Channel ExternalChoice(const Channel& a, const Channel& b, double r);

// Both channels observe the same secret; the adversary sees both outputs.
// Columns are pairs (y1,y2).
Channel Parallel(const Channel& a, const Channel& b);

// Tensor product over independent secrets: rows (x1,x2), columns (y1,y2),
// entry a[x1][y1]*b[x2][y2].
Channel Kronecker(const Channel& a, const Channel& b);

}  // namespace qif

#endif  // TOPICSQIF_QIF_COMPOSE_H_
