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

#include "vmap/nn/blocks.h"

#include <cassert>
#include <cmath>

namespace vmap {
namespace nn {

Tape::Var MultiHeadAttention(Tape& tape, Tape::Var query_in, Tape::Var kv_in,
                             const AttentionVars& p, int n_heads,
                             const std::vector<std::uint8_t>* key_valid,
                             const Matrix* additive_mask) {
  const int d_model = static_cast<int>(tape.Value(p.wq).cols());
  assert(d_model % n_heads == 0);
  const int d_head = d_model / n_heads;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d_head));

  const Tape::Var q = tape.AddRowVector(tape.MatMul(query_in, p.wq), p.bq);
  const Tape::Var k = tape.AddRowVector(tape.MatMul(kv_in, p.wk), p.bk);
  const Tape::Var v = tape.AddRowVector(tape.MatMul(kv_in, p.wv), p.bv);

  Tape::Var mask_node = -1;
  if (additive_mask != nullptr) {
    mask_node = tape.Constant(*additive_mask);
  }

  std::vector<Tape::Var> contexts;
  contexts.reserve(n_heads);
  for (int h = 0; h < n_heads; ++h) {
    const Tape::Var qh = tape.SliceCols(q, h * d_head, d_head);
    const Tape::Var kh = tape.SliceCols(k, h * d_head, d_head);
    const Tape::Var vh = tape.SliceCols(v, h * d_head, d_head);
    Tape::Var scores =
        tape.Affine(tape.MatMul(qh, tape.Transpose(kh)), scale, 0.0);
    if (mask_node >= 0) scores = tape.Add(scores, mask_node);
    const Tape::Var attn = tape.SoftmaxRows(scores, key_valid);
    contexts.push_back(tape.MatMul(attn, vh));
  }
  const Tape::Var merged =
      n_heads == 1 ? contexts[0] : tape.ConcatCols(contexts);
  return tape.AddRowVector(tape.MatMul(merged, p.wo), p.bo);
}

Tape::Var FeedForward(Tape& tape, Tape::Var x, const FeedForwardVars& p) {
  const Tape::Var hidden =
      tape.Gelu(tape.AddRowVector(tape.MatMul(x, p.w1), p.b1));
  return tape.AddRowVector(tape.MatMul(hidden, p.w2), p.b2);
}

Tape::Var AddNorm(Tape& tape, Tape::Var x, Tape::Var sublayer_out,
                  const LayerNormVars& p) {
  return tape.LayerNormRows(tape.Add(x, sublayer_out), p.gamma, p.beta);
}

}  // namespace nn
}  // namespace vmap
