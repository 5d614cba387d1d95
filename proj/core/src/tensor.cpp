#include "cxr/tensor.hpp"

#include <cmath>
#include <cstring>

namespace cxr {

std::string Tensor::shape_string(const std::vector<int>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s[i]);
  }
  out += ")";
  return out;
}

std::int64_t Tensor::checked_numel(const std::vector<int>& shape) {
  std::int64_t n = 1;
  for (int d : shape) {
    if (d <= 0) throw ShapeError("tensor: non-positive dimension in " + shape_string(shape));
    n *= d;
  }
  return n;
}

bool Tensor::bitwise_equal(const Tensor& o) const {
  if (shape_ != o.shape_) return false;
  if (data_ == o.data_) return true;
  return std::memcmp(data_->data(), o.data_->data(), data_->size() * sizeof(double)) == 0;
}

void Tensor::ensure_finite(const char* op) const {
  const double* p = data_->data();
  const std::int64_t n = numel();
  for (std::int64_t i = 0; i < n; ++i) {
    if (!std::isfinite(p[i])) {
      throw NumericError(std::string(op) + ": non-finite value at flat index " +
                         std::to_string(i) + " in tensor " + shape_str());
    }
  }
}

}  // namespace cxr
