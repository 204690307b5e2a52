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

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <vector>

namespace vmap {
namespace nn {

using Matrix = Eigen::MatrixXd;

// Reverse-mode autodiff tape over dense double matrices. Each op records
// its value and a backward closure; Backward() walks the tape in reverse
// creation order and accumulates gradients into every node that requires
// them. One tape per forward pass; tapes are independent, so concurrent
// evaluation across threads only needs one tape per thread.
class Tape {
 public:
  using Var = int;

  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  // Leaf node. Gradients are accumulated only when requires_grad is set.
  Var Input(Matrix value, bool requires_grad);
  Var Constant(Matrix value) { return Input(std::move(value), false); }
  Var ConstantScalar(double value);

  const Matrix& Value(Var v) const { return nodes_[v].value; }
  // Valid after Backward(); zero-sized for nodes without gradient.
  const Matrix& Grad(Var v) const { return nodes_[v].grad; }
  double Scalar(Var v) const { return nodes_[v].value(0, 0); }

  // Binary / unary ops. Shapes follow Eigen conventions; mismatches are
  // programming errors and trip asserts in debug builds.
  Var MatMul(Var a, Var b);
  Var Add(Var a, Var b);
  Var Subtract(Var a, Var b);
  Var CMul(Var a, Var b);  // elementwise product
  Var CDiv(Var a, Var b);  // elementwise quotient
  Var AddRowVector(Var a, Var row);
  Var Affine(Var a, double scale, double shift);
  Var Gelu(Var a);
  Var Sigmoid(Var a);
  Var Exp(Var a);
  Var Sqrt(Var a);
  Var Abs(Var a);
  Var Softplus(Var a);
  Var PowConst(Var a, double exponent);
  Var Transpose(Var a);
  Var SliceCols(Var a, int begin, int count);
  Var ConcatCols(const std::vector<Var>& parts);
  Var GatherRows(Var a, std::vector<int> rows);
  Var RowSum(Var a);   // R x C -> R x 1
  Var SumAll(Var a);   // -> 1 x 1
  Var MeanAll(Var a);  // -> 1 x 1

  // Row-wise softmax. When key_valid is given, invalid columns get zero
  // probability; a row with no valid column becomes all-zero (callers
  // rely on this for attention over an empty memory).
  Var SoftmaxRows(Var scores, const std::vector<std::uint8_t>* key_valid);
  Var LogSoftmaxRows(Var a);
  // Row-wise layer normalization with learned 1 x C scale and shift.
  Var LayerNormRows(Var a, Var gamma, Var beta, double eps = 1e-5);

  // Accumulates d(root)/d(node) for every contributing node; root must
  // be 1 x 1. May be called once per tape.
  void Backward(Var root);

  std::size_t NodeCount() const { return nodes_.size(); }

 private:
  struct Node {
    Matrix value;
    Matrix grad;
    bool requires_grad = false;
    std::function<void(Tape&)> backward;
  };

  Var Emit(Matrix value, bool requires_grad,
           std::function<void(Tape&)> backward);
  bool NeedsGrad(Var v) const { return nodes_[v].requires_grad; }
  // Gradient accumulator, allocated (zeroed) on first touch.
  Matrix& GradRef(Var v);

  std::vector<Node> nodes_;
};

}  // namespace nn
}  // namespace vmap
