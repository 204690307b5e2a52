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

#include "vmap/nn/tape.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace vmap {
namespace nn {
namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;

}  // namespace

Tape::Var Tape::Emit(Matrix value, bool requires_grad,
                     std::function<void(Tape&)> backward) {
  Node node;
  node.value = std::move(value);
  node.requires_grad = requires_grad;
  node.backward = std::move(backward);
  nodes_.push_back(std::move(node));
  return static_cast<Var>(nodes_.size()) - 1;
}

Matrix& Tape::GradRef(Var v) {
  Node& node = nodes_[v];
  if (node.grad.size() == 0) {
    node.grad = Matrix::Zero(node.value.rows(), node.value.cols());
  }
  return node.grad;
}

Tape::Var Tape::Input(Matrix value, bool requires_grad) {
  return Emit(std::move(value), requires_grad, nullptr);
}

Tape::Var Tape::ConstantScalar(double value) {
  Matrix m(1, 1);
  m(0, 0) = value;
  return Constant(std::move(m));
}

Tape::Var Tape::MatMul(Var a, Var b) {
  assert(Value(a).cols() == Value(b).rows());
  const bool ng = NeedsGrad(a) || NeedsGrad(b);
  Var out = Emit(Value(a) * Value(b), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a, b](Tape& t) {
      const Matrix& g = t.nodes_[out].grad;
      if (t.NeedsGrad(a)) t.GradRef(a).noalias() += g * t.Value(b).transpose();
      if (t.NeedsGrad(b)) t.GradRef(b).noalias() += t.Value(a).transpose() * g;
    };
  }
  return out;
}

Tape::Var Tape::Add(Var a, Var b) {
  assert(Value(a).rows() == Value(b).rows() &&
         Value(a).cols() == Value(b).cols());
  const bool ng = NeedsGrad(a) || NeedsGrad(b);
  Var out = Emit(Value(a) + Value(b), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a, b](Tape& t) {
      const Matrix& g = t.nodes_[out].grad;
      if (t.NeedsGrad(a)) t.GradRef(a) += g;
      if (t.NeedsGrad(b)) t.GradRef(b) += g;
    };
  }
  return out;
}

Tape::Var Tape::Subtract(Var a, Var b) {
  assert(Value(a).rows() == Value(b).rows() &&
         Value(a).cols() == Value(b).cols());
  const bool ng = NeedsGrad(a) || NeedsGrad(b);
  Var out = Emit(Value(a) - Value(b), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a, b](Tape& t) {
      const Matrix& g = t.nodes_[out].grad;
      if (t.NeedsGrad(a)) t.GradRef(a) += g;
      if (t.NeedsGrad(b)) t.GradRef(b) -= g;
    };
  }
  return out;
}

Tape::Var Tape::CMul(Var a, Var b) {
  assert(Value(a).rows() == Value(b).rows() &&
         Value(a).cols() == Value(b).cols());
  const bool ng = NeedsGrad(a) || NeedsGrad(b);
  Var out = Emit(Value(a).cwiseProduct(Value(b)), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a, b](Tape& t) {
      const Matrix& g = t.nodes_[out].grad;
      if (t.NeedsGrad(a)) t.GradRef(a) += g.cwiseProduct(t.Value(b));
      if (t.NeedsGrad(b)) t.GradRef(b) += g.cwiseProduct(t.Value(a));
    };
  }
  return out;
}

Tape::Var Tape::CDiv(Var a, Var b) {
  assert(Value(a).rows() == Value(b).rows() &&
         Value(a).cols() == Value(b).cols());
  const bool ng = NeedsGrad(a) || NeedsGrad(b);
  Var out = Emit(Value(a).cwiseQuotient(Value(b)), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a, b](Tape& t) {
      const Matrix& g = t.nodes_[out].grad;
      if (t.NeedsGrad(a)) t.GradRef(a) += g.cwiseQuotient(t.Value(b));
      if (t.NeedsGrad(b)) {
        t.GradRef(b) -= g.cwiseProduct(t.Value(out)).cwiseQuotient(t.Value(b));
      }
    };
  }
  return out;
}

Tape::Var Tape::AddRowVector(Var a, Var row) {
  assert(Value(row).rows() == 1 && Value(row).cols() == Value(a).cols());
  const bool ng = NeedsGrad(a) || NeedsGrad(row);
  Var out = Emit(Value(a).rowwise() + Value(row).row(0), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a, row](Tape& t) {
      const Matrix& g = t.nodes_[out].grad;
      if (t.NeedsGrad(a)) t.GradRef(a) += g;
      if (t.NeedsGrad(row)) t.GradRef(row) += g.colwise().sum();
    };
  }
  return out;
}

Tape::Var Tape::Affine(Var a, double scale, double shift) {
  const bool ng = NeedsGrad(a);
  Var out = Emit((Value(a).array() * scale + shift).matrix(), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a, scale](Tape& t) {
      t.GradRef(a) += scale * t.nodes_[out].grad;
    };
  }
  return out;
}

Tape::Var Tape::Gelu(Var a) {
  const bool ng = NeedsGrad(a);
  Matrix value = Value(a).unaryExpr(
      [](double x) { return 0.5 * x * (1.0 + std::erf(x * kInvSqrt2)); });
  Var out = Emit(std::move(value), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a](Tape& t) {
      const Matrix& g = t.nodes_[out].grad;
      const Matrix& x = t.Value(a);
      Matrix d = x.unaryExpr([](double v) {
        return 0.5 * (1.0 + std::erf(v * kInvSqrt2)) +
               v * kInvSqrt2Pi * std::exp(-0.5 * v * v);
      });
      t.GradRef(a) += g.cwiseProduct(d);
    };
  }
  return out;
}

Tape::Var Tape::Sigmoid(Var a) {
  const bool ng = NeedsGrad(a);
  Matrix value = Value(a).unaryExpr([](double x) {
    return x >= 0.0 ? 1.0 / (1.0 + std::exp(-x))
                    : std::exp(x) / (1.0 + std::exp(x));
  });
  Var out = Emit(std::move(value), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a](Tape& t) {
      const Matrix& g = t.nodes_[out].grad;
      const Matrix& y = t.Value(out);
      t.GradRef(a) +=
          g.cwiseProduct(y.cwiseProduct((1.0 - y.array()).matrix()));
    };
  }
  return out;
}

Tape::Var Tape::Exp(Var a) {
  const bool ng = NeedsGrad(a);
  Var out = Emit(Value(a).array().exp().matrix(), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a](Tape& t) {
      t.GradRef(a) += t.nodes_[out].grad.cwiseProduct(t.Value(out));
    };
  }
  return out;
}

Tape::Var Tape::Sqrt(Var a) {
  const bool ng = NeedsGrad(a);
  Var out = Emit(Value(a).array().sqrt().matrix(), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a](Tape& t) {
      const Matrix& y = t.Value(out);
      t.GradRef(a) +=
          (0.5 * t.nodes_[out].grad.array() / y.array()).matrix();
    };
  }
  return out;
}

Tape::Var Tape::Abs(Var a) {
  const bool ng = NeedsGrad(a);
  Var out = Emit(Value(a).cwiseAbs(), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a](Tape& t) {
      const Matrix sign = t.Value(a).unaryExpr([](double x) {
        return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
      });
      t.GradRef(a) += t.nodes_[out].grad.cwiseProduct(sign);
    };
  }
  return out;
}

Tape::Var Tape::Softplus(Var a) {
  const bool ng = NeedsGrad(a);
  Matrix value = Value(a).unaryExpr([](double x) {
    return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
  });
  Var out = Emit(std::move(value), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a](Tape& t) {
      const Matrix d = t.Value(a).unaryExpr([](double x) {
        return x >= 0.0 ? 1.0 / (1.0 + std::exp(-x))
                        : std::exp(x) / (1.0 + std::exp(x));
      });
      t.GradRef(a) += t.nodes_[out].grad.cwiseProduct(d);
    };
  }
  return out;
}

Tape::Var Tape::PowConst(Var a, double exponent) {
  const bool ng = NeedsGrad(a);
  Matrix value = Value(a).array().pow(exponent).matrix();
  Var out = Emit(std::move(value), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a, exponent](Tape& t) {
      if (exponent == 0.0) return;
      const Matrix d =
          (exponent * t.Value(a).array().pow(exponent - 1.0)).matrix();
      t.GradRef(a) += t.nodes_[out].grad.cwiseProduct(d);
    };
  }
  return out;
}

Tape::Var Tape::Transpose(Var a) {
  const bool ng = NeedsGrad(a);
  Var out = Emit(Value(a).transpose(), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a](Tape& t) {
      t.GradRef(a) += t.nodes_[out].grad.transpose();
    };
  }
  return out;
}

Tape::Var Tape::SliceCols(Var a, int begin, int count) {
  assert(begin >= 0 && begin + count <= Value(a).cols());
  const bool ng = NeedsGrad(a);
  Var out = Emit(Value(a).middleCols(begin, count), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a, begin, count](Tape& t) {
      t.GradRef(a).middleCols(begin, count) += t.nodes_[out].grad;
    };
  }
  return out;
}

Tape::Var Tape::ConcatCols(const std::vector<Var>& parts) {
  assert(!parts.empty());
  Eigen::Index rows = Value(parts[0]).rows();
  Eigen::Index cols = 0;
  bool ng = false;
  for (Var p : parts) {
    assert(Value(p).rows() == rows);
    cols += Value(p).cols();
    ng = ng || NeedsGrad(p);
  }
  Matrix value(rows, cols);
  Eigen::Index offset = 0;
  for (Var p : parts) {
    value.middleCols(offset, Value(p).cols()) = Value(p);
    offset += Value(p).cols();
  }
  Var out = Emit(std::move(value), ng, nullptr);
  if (ng) {
    std::vector<Var> captured = parts;
    nodes_[out].backward = [out, captured](Tape& t) {
      const Matrix& g = t.nodes_[out].grad;
      Eigen::Index offset = 0;
      for (Var p : captured) {
        const Eigen::Index c = t.Value(p).cols();
        if (t.NeedsGrad(p)) t.GradRef(p) += g.middleCols(offset, c);
        offset += c;
      }
    };
  }
  return out;
}

Tape::Var Tape::GatherRows(Var a, std::vector<int> rows) {
  const bool ng = NeedsGrad(a);
  Matrix value(static_cast<Eigen::Index>(rows.size()), Value(a).cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i] >= 0 && rows[i] < Value(a).rows());
    value.row(static_cast<Eigen::Index>(i)) = Value(a).row(rows[i]);
  }
  Var out = Emit(std::move(value), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a, rows = std::move(rows)](Tape& t) {
      const Matrix& g = t.nodes_[out].grad;
      Matrix& ga = t.GradRef(a);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        ga.row(rows[i]) += g.row(static_cast<Eigen::Index>(i));
      }
    };
  }
  return out;
}

Tape::Var Tape::RowSum(Var a) {
  const bool ng = NeedsGrad(a);
  Var out = Emit(Value(a).rowwise().sum(), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a](Tape& t) {
      const Matrix& g = t.nodes_[out].grad;  // R x 1
      t.GradRef(a) += g * Matrix::Ones(1, t.Value(a).cols());
    };
  }
  return out;
}

Tape::Var Tape::SumAll(Var a) {
  const bool ng = NeedsGrad(a);
  Matrix value(1, 1);
  value(0, 0) = Value(a).sum();
  Var out = Emit(std::move(value), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a](Tape& t) {
      t.GradRef(a).array() += t.nodes_[out].grad(0, 0);
    };
  }
  return out;
}

Tape::Var Tape::MeanAll(Var a) {
  const bool ng = NeedsGrad(a);
  const double n = static_cast<double>(Value(a).size());
  Matrix value(1, 1);
  value(0, 0) = Value(a).sum() / n;
  Var out = Emit(std::move(value), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a, n](Tape& t) {
      t.GradRef(a).array() += t.nodes_[out].grad(0, 0) / n;
    };
  }
  return out;
}

Tape::Var Tape::SoftmaxRows(Var scores,
                            const std::vector<std::uint8_t>* key_valid) {
  const Matrix& s = Value(scores);
  assert(key_valid == nullptr ||
         static_cast<Eigen::Index>(key_valid->size()) == s.cols());
  Matrix p = Matrix::Zero(s.rows(), s.cols());
  for (Eigen::Index r = 0; r < s.rows(); ++r) {
    double max_v = -std::numeric_limits<double>::infinity();
    for (Eigen::Index c = 0; c < s.cols(); ++c) {
      if (key_valid && !(*key_valid)[c]) continue;
      max_v = std::max(max_v, s(r, c));
    }
    if (!std::isfinite(max_v)) continue;  // no valid key: zero row
    double z = 0.0;
    for (Eigen::Index c = 0; c < s.cols(); ++c) {
      if (key_valid && !(*key_valid)[c]) continue;
      const double e = std::exp(s(r, c) - max_v);
      p(r, c) = e;
      z += e;
    }
    if (z > 0.0) p.row(r) /= z;
  }
  const bool ng = NeedsGrad(scores);
  Var out = Emit(std::move(p), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, scores](Tape& t) {
      const Matrix& g = t.nodes_[out].grad;
      const Matrix& prob = t.Value(out);
      const Matrix gp = g.cwiseProduct(prob);
      const Eigen::VectorXd row_dot = gp.rowwise().sum();
      t.GradRef(scores) += gp - prob.cwiseProduct(row_dot * Matrix::Ones(1, prob.cols()));
    };
  }
  return out;
}

Tape::Var Tape::LogSoftmaxRows(Var a) {
  const Matrix& s = Value(a);
  Matrix out_v(s.rows(), s.cols());
  for (Eigen::Index r = 0; r < s.rows(); ++r) {
    const double max_v = s.row(r).maxCoeff();
    const double lse =
        max_v + std::log((s.row(r).array() - max_v).exp().sum());
    out_v.row(r) = s.row(r).array() - lse;
  }
  const bool ng = NeedsGrad(a);
  Var out = Emit(std::move(out_v), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a](Tape& t) {
      const Matrix& g = t.nodes_[out].grad;
      const Matrix prob = t.Value(out).array().exp().matrix();
      const Eigen::VectorXd row_sum = g.rowwise().sum();
      t.GradRef(a) +=
          g - prob.cwiseProduct(row_sum * Matrix::Ones(1, prob.cols()));
    };
  }
  return out;
}

Tape::Var Tape::LayerNormRows(Var a, Var gamma, Var beta, double eps) {
  const Matrix& x = Value(a);
  assert(Value(gamma).rows() == 1 && Value(gamma).cols() == x.cols());
  assert(Value(beta).rows() == 1 && Value(beta).cols() == x.cols());
  const Eigen::Index cols = x.cols();
  Matrix normalized(x.rows(), cols);
  Eigen::VectorXd inv_std(x.rows());
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    const double mean = x.row(r).mean();
    const double var =
        (x.row(r).array() - mean).square().sum() / static_cast<double>(cols);
    const double is = 1.0 / std::sqrt(var + eps);
    inv_std(r) = is;
    normalized.row(r) = (x.row(r).array() - mean) * is;
  }
  Matrix value =
      (normalized.array().rowwise() * Value(gamma).row(0).array()).matrix();
  value.rowwise() += Value(beta).row(0);
  const bool ng = NeedsGrad(a) || NeedsGrad(gamma) || NeedsGrad(beta);
  Var out = Emit(std::move(value), ng, nullptr);
  if (ng) {
    nodes_[out].backward = [out, a, gamma, beta, normalized = std::move(normalized),
                            inv_std = std::move(inv_std)](Tape& t) {
      const Matrix& g = t.nodes_[out].grad;
      if (t.NeedsGrad(beta)) t.GradRef(beta) += g.colwise().sum();
      if (t.NeedsGrad(gamma)) {
        t.GradRef(gamma) += g.cwiseProduct(normalized).colwise().sum();
      }
      if (t.NeedsGrad(a)) {
        const Eigen::Index cols = g.cols();
        const double inv_cols = 1.0 / static_cast<double>(cols);
        Matrix h = g.array().rowwise() * t.Value(gamma).row(0).array();
        Matrix& ga = t.GradRef(a);
        for (Eigen::Index r = 0; r < g.rows(); ++r) {
          const double mean_h = h.row(r).sum() * inv_cols;
          const double mean_hx =
              h.row(r).cwiseProduct(normalized.row(r)).sum() * inv_cols;
          ga.row(r) += (inv_std(r) *
                        (h.row(r).array() - mean_h -
                         normalized.row(r).array() * mean_hx))
                           .matrix();
        }
      }
    };
  }
  return out;
}

void Tape::Backward(Var root) {
  if (Value(root).rows() != 1 || Value(root).cols() != 1) {
    throw std::logic_error("Backward root must be a scalar node");
  }
  GradRef(root)(0, 0) = 1.0;
  for (Var v = root; v >= 0; --v) {
    Node& node = nodes_[v];
    if (!node.requires_grad || !node.backward) continue;
    if (node.grad.size() == 0) continue;  // no influence on the root
    node.backward(*this);
  }
}

}  // namespace nn
}  // namespace vmap
