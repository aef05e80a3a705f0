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
// Executes a RunConfig: integrates, then writes series.csv and snapshots.
//
// series.csv has the columns time, energy and the model's invariants in
// diagnostics::invariants() order. Snapshot files are named
// snapshot_t<t>_<field>.csv and carry one of these headers:
//
//   field,time,k,re,im          circle modes k = 0..N (c_{-k} = conj c_k)
//   field,time,k1,k2,re,im      torus modes of the half plane k2 >= 0
//                               (k1 >= 0 on the k2 = 0 line)
//   field,time,x,value          circle grid values   (output.grid = true)
//   field,time,x,y,value        torus grid values    (output.grid = true)
//   field,time,i,value          rigid-body vector components
//
// Velocity components include their harmonic part in the k = 0 slot.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ea/config.hpp"
#include "ea/trajectory.hpp"

namespace ea::runner {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunResult {
  Trajectory trajectory;
  std::vector<std::string> columns;
  /// Set when the run stopped early; the trajectory is then partial.
  std::optional<double> diverged_at;
  std::string message;
  std::vector<std::string> files;

  int exit_code() const { return diverged_at ? 2 : 0; }
};

/// Integrates without touching the filesystem.
RunResult simulate(const config::RunConfig& cfg);

/// simulate() followed by write_outputs(). Throws ConfigError or IoError.
RunResult run(const config::RunConfig& cfg);

/// Writes series.csv and the configured snapshots into cfg.output.directory
/// and records the file paths in result.files.
void write_outputs(const config::RunConfig& cfg, RunResult& result);

/// RFC-4180 field quoting.
std::string csv_field(const std::string& s);
/// Shortest round-trip decimal representation.
std::string format_number(double v);
/// Time as used in snapshot file names.
std::string format_time(double t);

std::string snapshot_filename(double t, const std::string& field);

void write_series(std::ostream& out, const std::vector<std::string>& columns, const Trajectory& traj);
void write_snapshot(std::ostream& out, const models::ModelState& s, const std::string& field, double t,
                    bool grid, int circle_points);

}  // namespace ea::runner
