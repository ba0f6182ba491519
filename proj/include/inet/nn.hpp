// Copyright 2026 the interaction-net authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inet/rng.hpp"
#include "inet/tensor.hpp"

namespace inet {

enum class Activation { Identity, Relu, Tanh, Sigmoid };

const char* to_string(Activation a);
Activation activation_from_string(const std::string& s);

struct Layer {
  Tensor weight;  // [out x in]
  Tensor bias;    // [out]
  Activation act = Activation::Identity;

  size_t in_dim() const { return weight.cols(); }
  size_t out_dim() const { return weight.rows(); }
};

// Per-layer intermediates of one forward pass, consumed by backward().
struct ForwardTrace {
  std::vector<double> input;
  std::vector<std::vector<double>> pre;   // pre-activation, per layer
  std::vector<std::vector<double>> post;  // post-activation, per layer
};

struct LayerGrads {
  Tensor dw;
  Tensor db;
};

class FeedForwardNet;

// Parameter gradients matching a net's layer structure. Accumulation across
// repeated executions of the same net is additive.
struct GradientSet {
  std::vector<LayerGrads> layers;

  static GradientSet zeros_like(const FeedForwardNet& net);
  void add(const GradientSet& other);
  void scale(double s);
  double l2_norm() const;
  bool all_finite() const;
};

class FeedForwardNet {
 public:
  FeedForwardNet() = default;
  explicit FeedForwardNet(std::vector<Layer> layers);

  // Weights drawn uniform in [-1/sqrt(fan_in), +1/sqrt(fan_in)], biases zero.
  static FeedForwardNet make(size_t input_dim, const std::vector<size_t>& hidden,
                             size_t output_dim, Activation hidden_act,
                             Activation output_act, Rng& rng);

  size_t input_dim() const;
  size_t output_dim() const;
  size_t layer_count() const { return layers_.size(); }
  const Layer& layer(size_t i) const { return layers_[i]; }
  Layer& layer(size_t i) { return layers_[i]; }
  const std::vector<Layer>& layers() const { return layers_; }

  size_t param_count() const;

  Tensor forward(const Tensor& input, ForwardTrace* trace = nullptr) const;

  // Backpropagates output_grad through a trace produced by this net's
  // forward(). Accumulates parameter gradients into grads and returns the
  // gradient with respect to the input. Rejects traces whose shape does not
  // match the net.
  Tensor backward(const ForwardTrace& trace, const Tensor& output_grad,
                  GradientSet& grads) const;

  // Appends one output unit to the final layer (used for dynamic action
  // heads): a new weight row and bias entry.
  void append_output_row(const std::vector<double>& weights, double bias);

  uint64_t param_checksum() const;

 private:
  std::vector<Layer> layers_;
};

struct OptimizerState {
  enum class Kind { Sgd, Adam };
  enum class NonFinitePolicy { Reject, Zero };

  Kind kind = Kind::Sgd;
  double learning_rate = 0.01;
  std::optional<double> clip_norm;
  NonFinitePolicy on_nonfinite = NonFinitePolicy::Reject;

  // adam
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;

  uint64_t step = 0;
  std::vector<LayerGrads> m;  // first moments, sized lazily
  std::vector<LayerGrads> v;  // second moments

  static OptimizerState sgd(double lr, std::optional<double> clip = {});
  static OptimizerState adam(double lr, std::optional<double> clip = {});
};

// Applies one optimizer update. Clipping (when configured) rescales the whole
// gradient set to the target global norm; it never increases the norm.
void apply_grads(FeedForwardNet& net, GradientSet grads, OptimizerState& opt);

// loss = mean((pred - target)^2), grad = 2 (pred - target) / n
std::pair<double, Tensor> mse_loss(const Tensor& pred, const Tensor& target);

// Central-difference gradient estimate for every parameter. Only uses
// forward(), so it is an independent check on backward().
GradientSet finite_diff_grads(const FeedForwardNet& net, const Tensor& input,
                              const std::function<double(const Tensor&)>& loss_fn,
                              double eps);

}  // namespace inet
