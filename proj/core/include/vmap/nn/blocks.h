/*
 * Copyright 2026 The VMap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "vmap/nn/tape.h"

namespace vmap {
namespace nn {

struct AttentionVars {
  Tape::Var wq, bq, wk, bk, wv, bv, wo, bo;
};

struct LayerNormVars {
  Tape::Var gamma, beta;
};

struct FeedForwardVars {
  Tape::Var w1, b1, w2, b2;
};

// Scaled dot-product multi-head attention. queries: Q x d, keys/values
// come from kv_in: T x d. key_valid (optional) masks padded memory
// columns; queries facing an empty memory produce a zero context row.
// additive_mask (optional, Q x T) is added to every head's scores, e.g.
// a block mask restricting attention to intra-instance neighbors.
Tape::Var MultiHeadAttention(Tape& tape, Tape::Var query_in, Tape::Var kv_in,
                             const AttentionVars& p, int n_heads,
                             const std::vector<std::uint8_t>* key_valid,
                             const Matrix* additive_mask);

// Position-wise two-layer MLP with GELU.
Tape::Var FeedForward(Tape& tape, Tape::Var x, const FeedForwardVars& p);

// Post-norm residual block: LayerNorm(x + sublayer_out).
Tape::Var AddNorm(Tape& tape, Tape::Var x, Tape::Var sublayer_out,
                  const LayerNormVars& p);

}  // namespace nn
}  // namespace vmap
