#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ssrl/tensor.hpp"

namespace ssrl {

class Tape;

/// Handle to a node on a Tape.
struct Var {
  std::size_t id = static_cast<std::size_t>(-1);
  bool valid() const { return id != static_cast<std::size_t>(-1); }
};

/// Append-only reverse-mode tape. Nodes refer only to earlier nodes, so the
/// graph is acyclic by construction and backward() is a single reverse sweep.
class Tape {
public:
  /// Leaf that never receives a gradient (data, detached pseudo-targets).
  Var constant(Tensor value);
  /// Leaf whose gradient is accumulated by backward().
  Var leaf(Tensor value);

  const Tensor& value(Var v) const { return nodes_.at(v.id).value; }
  /// Zero tensor when no gradient reached the node.
  const Tensor& grad(Var v);
  double scalar(Var v) const;
  bool requires_grad(Var v) const { return nodes_.at(v.id).requires_grad; }
  std::size_t size() const { return nodes_.size(); }

  /// Seeds d(out)/d(out) = 1 for a one-element node and sweeps backward.
  void backward(Var out);

  // Primitives. Binary ops need equal shapes.
  Var conv3x3(Var x, Var weight, Var bias);  // zero padding 1
  Var relu(Var x);                           // subgradient 0 at 0
  Var add(Var a, Var b);
  Var sub(Var a, Var b);
  Var scale(Var a, double k);
  Var square(Var a);
  Var mul_const(Var a, const Tensor& mask);  // masked select
  Var sum(Var a);                            // to a 1-element tensor
  Var sqrt(Var a);                           // elementwise

private:
  struct Node {
    Tensor value;
    Tensor grad;
    bool requires_grad = false;
    std::function<void(Tape&, std::size_t)> backward;
  };
  Var push(Tensor value, bool requires_grad, std::function<void(Tape&, std::size_t)> backward);
  Tensor& grad_ref(std::size_t id);

  std::vector<Node> nodes_;
};

/// Plain forward convolution shared by the tape and tape-free inference.
Tensor conv3x3_forward(const Tensor& x, const Tensor& weight, const Tensor& bias);

}  // namespace ssrl
