// Copyright 2026 The euler-arnold Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <memory>
#include <span>

namespace ea::fft {

using Complex = std::complex<double>;

/// Real-to-complex transform pair on a periodic grid of n points.
///
/// forward() is unnormalized: out[k] = sum_j in[j] exp(-2 pi i j k / n), k = 0..n/2.
/// backward() evaluates sum_k c_k exp(+2 pi i j k / n) over the full Hermitian
/// spectrum, i.e. it maps series coefficients straight to grid values.
/// Plans are shared and immutable; execute calls are safe from any thread.
class RealTransform1D {
 public:
  explicit RealTransform1D(int n);
  ~RealTransform1D();
  RealTransform1D(const RealTransform1D&) = delete;
  RealTransform1D& operator=(const RealTransform1D&) = delete;

  int size() const { return n_; }
  int spectral_size() const { return n_ / 2 + 1; }

  void forward(std::span<const double> grid, std::span<Complex> spectrum) const;
  void backward(std::span<const Complex> spectrum, std::span<double> grid) const;

 private:
  int n_;
  void* forward_plan_;
  void* backward_plan_;
};

/// Two-dimensional analogue on an nx-by-ny grid stored row-major with x
/// as the slow index. The spectral array has nx * (ny/2 + 1) entries.
class RealTransform2D {
 public:
  RealTransform2D(int nx, int ny);
  ~RealTransform2D();
  RealTransform2D(const RealTransform2D&) = delete;
  RealTransform2D& operator=(const RealTransform2D&) = delete;

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int spectral_ny() const { return ny_ / 2 + 1; }

  void forward(std::span<const double> grid, std::span<Complex> spectrum) const;
  void backward(std::span<const Complex> spectrum, std::span<double> grid) const;

 private:
  int nx_;
  int ny_;
  void* forward_plan_;
  void* backward_plan_;
};

// Cached transforms, one per size; creation is serialized internally.
std::shared_ptr<const RealTransform1D> transform_1d(int n);
std::shared_ptr<const RealTransform2D> transform_2d(int nx, int ny);

bool is_power_of_two(int n);

}  // namespace ea::fft
