// Copyright 2026 the interaction-net authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace inet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised on malformed configs; maps to a distinct process exit code.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Dense row-major tensor of finite doubles. Only rank 1 and rank 2 are needed
// at this scale: node values are vectors, layer weights are matrices.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::vector<size_t> shape, std::vector<double> data);

  static Tensor zeros(const std::vector<size_t>& shape);
  static Tensor vec(std::vector<double> values);
  static Tensor matrix(size_t rows, size_t cols, std::vector<double> values);

  const std::vector<size_t>& shape() const { return shape_; }
  size_t rank() const { return shape_.size(); }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  // rank-2 accessors
  size_t rows() const;
  size_t cols() const;
  double& at(size_t r, size_t c) { return data_[r * cols() + c]; }
  double at(size_t r, size_t c) const { return data_[r * cols() + c]; }

  double& operator[](size_t i) { return data_[i]; }
  double operator[](size_t i) const { return data_[i]; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  bool operator==(const Tensor& other) const {
    return shape_ == other.shape_ && data_ == other.data_;
  }

  void fill(double v);
  double l2_norm() const;

  // Throws Error if any element is NaN or infinite.
  void require_finite(const std::string& context) const;

 private:
  std::vector<size_t> shape_;
  std::vector<double> data_;
};

}  // namespace inet
