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

#include <map>
#include <string>
#include <vector>

#include "ea/models.hpp"

namespace ea {

/// Recorded states with the diagnostics evaluated at each record time.
struct Trajectory {
  std::vector<double> times;
  std::vector<models::ModelState> states;
  std::vector<std::map<std::string, double>> diagnostics;

  size_t size() const { return times.size(); }
  bool empty() const { return times.empty(); }
};

}  // namespace ea
