#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cxr/errors.hpp"

namespace cxr {

// Parameters are kept float32-representable at all times (init, optimizer
// updates, running-stat updates) so the 32-bit on-disk blobs round-trip
// bitwise. Math still runs in 64-bit.
inline double round_f32(double v) { return static_cast<double>(static_cast<float>(v)); }

// Dense n-dimensional array of 64-bit floats, row-major. Copies share the
// underlying buffer; a tensor handed to another component is treated as
// immutable from then on. Mutation goes through mutable_data() and is only
// legal while the producer still holds the sole reference (training code
// replaces parameter tensors wholesale instead of writing through shared
// buffers).
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<int> shape)
      : shape_(std::move(shape)),
        data_(std::make_shared<std::vector<double>>(checked_numel(shape_), 0.0)) {}

  Tensor(std::vector<int> shape, std::vector<double> values)
      : shape_(std::move(shape)),
        data_(std::make_shared<std::vector<double>>(std::move(values))) {
    if (static_cast<std::int64_t>(data_->size()) != checked_numel(shape_)) {
      throw ShapeError("tensor: value count " + std::to_string(data_->size()) +
                       " does not match shape " + shape_string(shape_));
    }
  }

  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }

  static Tensor full(std::vector<int> shape, double value) {
    Tensor t(std::move(shape));
    for (double& v : *t.data_) v = value;
    return t;
  }

  static Tensor scalar(double value) { return Tensor({1}, {value}); }

  const std::vector<int>& shape() const { return shape_; }
  int ndim() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_.at(static_cast<std::size_t>(i)); }

  std::int64_t numel() const {
    return data_ ? static_cast<std::int64_t>(data_->size()) : 0;
  }

  bool defined() const { return static_cast<bool>(data_); }

  const double* data() const { return data_->data(); }
  double* mutable_data() { return data_->data(); }

  double operator[](std::int64_t i) const { return (*data_)[static_cast<std::size_t>(i)]; }

  // NCHW element index.
  std::int64_t index4(int n, int c, int h, int w) const {
    return ((static_cast<std::int64_t>(n) * shape_[1] + c) * shape_[2] + h) * shape_[3] + w;
  }

  double at4(int n, int c, int h, int w) const { return (*data_)[index4(n, c, h, w)]; }

  // Same buffer, new shape (element count must match).
  Tensor reshaped(std::vector<int> new_shape) const {
    if (checked_numel(new_shape) != numel()) {
      throw ShapeError("reshape: cannot view " + shape_string(shape_) + " as " +
                       shape_string(new_shape));
    }
    Tensor t;
    t.shape_ = std::move(new_shape);
    t.data_ = data_;
    return t;
  }

  Tensor deep_copy() const {
    Tensor t;
    t.shape_ = shape_;
    t.data_ = std::make_shared<std::vector<double>>(*data_);
    return t;
  }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  bool bitwise_equal(const Tensor& o) const;

  std::string shape_str() const { return shape_string(shape_); }

  // Throws NumericError naming `op` if any element is NaN/Inf.
  void ensure_finite(const char* op) const;

  static std::string shape_string(const std::vector<int>& s);

 private:
  static std::int64_t checked_numel(const std::vector<int>& shape);

  std::vector<int> shape_;
  std::shared_ptr<std::vector<double>> data_;
};

}  // namespace cxr
