// Copyright 2026 the interaction-net authors
// SPDX-License-Identifier: Apache-2.0
#include "inet/tensor.hpp"

#include <cmath>
#include <numeric>

namespace inet {

namespace {
size_t shape_product(const std::vector<size_t>& shape) {
  size_t n = 1;
  for (size_t d : shape) n *= d;
  return n;
}
}  // namespace

Tensor::Tensor(std::vector<size_t> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (shape_.empty()) throw Error("tensor: empty shape");
  for (size_t d : shape_) {
    if (d == 0) throw Error("tensor: zero dimension");
  }
  if (shape_product(shape_) != data_.size()) {
    throw Error("tensor: shape/data length mismatch");
  }
  require_finite("construct");
}

Tensor Tensor::zeros(const std::vector<size_t>& shape) {
  return Tensor(shape, std::vector<double>(shape_product(shape), 0.0));
}

Tensor Tensor::vec(std::vector<double> values) {
  size_t n = values.size();
  return Tensor({n}, std::move(values));
}

Tensor Tensor::matrix(size_t rows, size_t cols, std::vector<double> values) {
  return Tensor({rows, cols}, std::move(values));
}

size_t Tensor::rows() const {
  if (rank() != 2) throw Error("tensor: rows() on rank-" + std::to_string(rank()));
  return shape_[0];
}

size_t Tensor::cols() const {
  if (rank() != 2) throw Error("tensor: cols() on rank-" + std::to_string(rank()));
  return shape_[1];
}

void Tensor::fill(double v) {
  for (double& x : data_) x = v;
}

double Tensor::l2_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

void Tensor::require_finite(const std::string& context) const {
  for (double x : data_) {
    if (!std::isfinite(x)) throw Error("non-finite value in " + context);
  }
}

}  // namespace inet
