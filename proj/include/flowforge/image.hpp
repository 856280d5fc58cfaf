#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "flowforge/error.hpp"

namespace flowforge {

enum class TensorRole : uint8_t { Image, FeatureMap, WeightMap, Heatmap };

// Dense H x W x C float tensor, row-major. Construction rejects non-finite
// values; the weight-map role additionally requires a single channel with
// values in [0, 1].
class ImageTensor {
 public:
  ImageTensor(int height, int width, int channels, TensorRole role, float fill = 0.0f);
  ImageTensor(int height, int width, int channels, TensorRole role, std::vector<float> values);

  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }
  TensorRole role() const { return role_; }

  std::size_t size() const { return values_.size(); }
  std::size_t index(int y, int x, int c) const {
    return (std::size_t(y) * width_ + x) * channels_ + c;
  }
  float at(int y, int x, int c) const { return values_[index(y, x, c)]; }
  float& at(int y, int x, int c) { return values_[index(y, x, c)]; }

  const std::vector<float>& values() const { return values_; }
  std::vector<float>& values() { return values_; }

  bool same_shape(const ImageTensor& o) const {
    return height_ == o.height_ && width_ == o.width_ && channels_ == o.channels_;
  }

  // Re-checks the construction invariants after in-place edits.
  void validate() const;

 private:
  int height_;
  int width_;
  int channels_;
  TensorRole role_;
  std::vector<float> values_;
};

}  // namespace flowforge
