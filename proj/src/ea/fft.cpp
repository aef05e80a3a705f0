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

#include "ea/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ea::fft {
namespace {

// FFTW's planner is not thread-safe; execution with the new-array interface is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

constexpr unsigned kPlanFlags = FFTW_ESTIMATE | FFTW_UNALIGNED;

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

RealTransform1D::RealTransform1D(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("transform size must be at least 2");
  std::vector<double> grid(n);
  std::vector<Complex> spec(n / 2 + 1);
  std::lock_guard lock(planner_mutex());
  forward_plan_ = fftw_plan_dft_r2c_1d(n, grid.data(), as_fftw(spec.data()), kPlanFlags);
  backward_plan_ = fftw_plan_dft_c2r_1d(n, as_fftw(spec.data()), grid.data(), kPlanFlags);
}

RealTransform1D::~RealTransform1D() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
}

void RealTransform1D::forward(std::span<const double> grid, std::span<Complex> spectrum) const {
  if (static_cast<int>(grid.size()) != n_ || static_cast<int>(spectrum.size()) != spectral_size())
    throw std::invalid_argument("RealTransform1D::forward: size mismatch");
  fftw_execute_dft_r2c(static_cast<fftw_plan>(forward_plan_), const_cast<double*>(grid.data()),
                       as_fftw(spectrum.data()));
}

void RealTransform1D::backward(std::span<const Complex> spectrum, std::span<double> grid) const {
  if (static_cast<int>(grid.size()) != n_ || static_cast<int>(spectrum.size()) != spectral_size())
    throw std::invalid_argument("RealTransform1D::backward: size mismatch");
  // c2r overwrites its input.
  std::vector<Complex> scratch(spectrum.begin(), spectrum.end());
  fftw_execute_dft_c2r(static_cast<fftw_plan>(backward_plan_), as_fftw(scratch.data()), grid.data());
}

RealTransform2D::RealTransform2D(int nx, int ny) : nx_(nx), ny_(ny) {
  if (nx < 2 || ny < 2) throw std::invalid_argument("transform size must be at least 2");
  std::vector<double> grid(static_cast<size_t>(nx) * ny);
  std::vector<Complex> spec(static_cast<size_t>(nx) * (ny / 2 + 1));
  std::lock_guard lock(planner_mutex());
  forward_plan_ = fftw_plan_dft_r2c_2d(nx, ny, grid.data(), as_fftw(spec.data()), kPlanFlags);
  backward_plan_ = fftw_plan_dft_c2r_2d(nx, ny, as_fftw(spec.data()), grid.data(), kPlanFlags);
}

RealTransform2D::~RealTransform2D() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
}

void RealTransform2D::forward(std::span<const double> grid, std::span<Complex> spectrum) const {
  if (grid.size() != static_cast<size_t>(nx_) * ny_ ||
      spectrum.size() != static_cast<size_t>(nx_) * spectral_ny())
    throw std::invalid_argument("RealTransform2D::forward: size mismatch");
  fftw_execute_dft_r2c(static_cast<fftw_plan>(forward_plan_), const_cast<double*>(grid.data()),
                       as_fftw(spectrum.data()));
}

void RealTransform2D::backward(std::span<const Complex> spectrum, std::span<double> grid) const {
  if (grid.size() != static_cast<size_t>(nx_) * ny_ ||
      spectrum.size() != static_cast<size_t>(nx_) * spectral_ny())
    throw std::invalid_argument("RealTransform2D::backward: size mismatch");
  std::vector<Complex> scratch(spectrum.begin(), spectrum.end());
  fftw_execute_dft_c2r(static_cast<fftw_plan>(backward_plan_), as_fftw(scratch.data()), grid.data());
}

std::shared_ptr<const RealTransform1D> transform_1d(int n) {
  static std::mutex cache_mutex;
  static std::map<int, std::shared_ptr<const RealTransform1D>> cache;
  std::lock_guard lock(cache_mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const RealTransform1D>(n);
  return slot;
}

std::shared_ptr<const RealTransform2D> transform_2d(int nx, int ny) {
  static std::mutex cache_mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const RealTransform2D>> cache;
  std::lock_guard lock(cache_mutex);
  auto& slot = cache[{nx, ny}];
  if (!slot) slot = std::make_shared<const RealTransform2D>(nx, ny);
  return slot;
}

}  // namespace ea::fft
