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

#include "ea/runner.hpp"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>

#include "ea/diagnostics.hpp"
#include "ea/errors.hpp"
#include "ea/integrators.hpp"
#include "ea/presets.hpp"

namespace ea::runner {

namespace fs = std::filesystem;
using models::Field2D;
using models::Spectrum1D;

namespace {

// A snapshot field is either a circle spectrum, a torus field or a vector.
struct FieldView {
  const Spectrum1D* circle = nullptr;
  std::optional<Field2D> torus;
  const Eigen::VectorXd* vector = nullptr;
};

Field2D with_mean(const models::VecField2D& v, int i) {
  Field2D f = v.c[i];
  f.set_mean(v.mean[i]);
  return f;
}

FieldView view(const models::ModelState& s, const std::string& field) {
  FieldView out;
  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, models::CircleState>) {
          if (field == "u" || field == "v") out.circle = &st.u;
        } else if constexpr (std::is_same_v<T, models::CirclePairState>) {
          if (field == "u") out.circle = &st.u;
          if (field == "f") out.circle = &st.f;
        } else if constexpr (std::is_same_v<T, models::VorticityState>) {
          if (field == "omega") out.torus = st.omega;
        } else if constexpr (std::is_same_v<T, models::VorticityPairState>) {
          if (field == "omega") out.torus = st.omega;
          if (field == "xi" || field == "f") out.torus = st.tracer;
        } else if constexpr (std::is_same_v<T, models::VelocityState>) {
          if (field == "u1") out.torus = with_mean(st.u, 0);
          if (field == "u2") out.torus = with_mean(st.u, 1);
        } else if constexpr (std::is_same_v<T, models::VelocityPairState>) {
          if (field == "u1") out.torus = with_mean(st.u, 0);
          if (field == "u2") out.torus = with_mean(st.u, 1);
          if (field == "B1") out.torus = with_mean(st.B, 0);
          if (field == "B2") out.torus = with_mean(st.B, 1);
        } else if constexpr (std::is_same_v<T, models::ChargedState>) {
          if (field == "u1") out.torus = with_mean(st.u, 0);
          if (field == "u2") out.torus = with_mean(st.u, 1);
          if (field == "rho") out.torus = st.rho;
        } else if constexpr (std::is_same_v<T, models::AlgebraState>) {
          if (field == "u") out.vector = &st.u;
        }
      },
      s);
  if (!out.circle && !out.torus && !out.vector) throw ContractError("snapshot: state has no field '" + field + "'");
  return out;
}

std::ofstream open(const fs::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot write '" + p.string() + "'");
  return out;
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string format_number(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string format_time(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", t);
  return buf;
}

std::string snapshot_filename(double t, const std::string& field) {
  return "snapshot_t" + format_time(t) + "_" + field + ".csv";
}

void write_series(std::ostream& out, const std::vector<std::string>& columns, const Trajectory& traj) {
  for (size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << csv_field(columns[c]);
  out << "\r\n";
  for (size_t i = 0; i < traj.size(); ++i) {
    out << format_number(traj.times[i]);
    for (size_t c = 1; c < columns.size(); ++c) {
      const auto it = traj.diagnostics[i].find(columns[c]);
      out << "," << (it == traj.diagnostics[i].end() ? std::string() : format_number(it->second));
    }
    out << "\r\n";
  }
}

void write_snapshot(std::ostream& out, const models::ModelState& s, const std::string& field, double t, bool grid,
                    int circle_points) {
  const FieldView v = view(s, field);
  const std::string prefix = csv_field(field) + "," + format_number(t) + ",";
  if (v.vector) {
    out << "field,time,i,value\r\n";
    for (Eigen::Index i = 0; i < v.vector->size(); ++i)
      out << prefix << i << "," << format_number((*v.vector)(i)) << "\r\n";
  } else if (v.circle && grid) {
    out << "field,time,x,value\r\n";
    const std::vector<double> g = spectral1d::to_grid(*v.circle, circle_points);
    for (int j = 0; j < circle_points; ++j)
      out << prefix << format_number(2.0 * std::numbers::pi * j / circle_points) << "," << format_number(g[j])
          << "\r\n";
  } else if (v.circle) {
    out << "field,time,k,re,im\r\n";
    for (int k = 0; k <= v.circle->n_modes(); ++k) {
      const auto c = (*v.circle)[k];
      out << prefix << k << "," << format_number(c.real()) << "," << format_number(c.imag()) << "\r\n";
    }
  } else if (grid) {
    const Field2D& f = *v.torus;
    out << "field,time,x,y,value\r\n";
    const std::vector<double> g = spectral2d::to_grid(f);
    for (int i = 0; i < f.nx(); ++i)
      for (int j = 0; j < f.ny(); ++j)
        out << prefix << format_number(2.0 * std::numbers::pi * i / f.nx()) << ","
            << format_number(2.0 * std::numbers::pi * j / f.ny()) << ","
            << format_number(g[static_cast<size_t>(i) * f.ny() + j]) << "\r\n";
  } else {
    const Field2D& f = *v.torus;
    out << "field,time,k1,k2,re,im\r\n";
    for (int k2 = 0; k2 < f.nky(); ++k2)
      for (int k1 = -f.nx() / 2; k1 < f.nx() / 2; ++k1) {
        if (!f.retained(k1, k2) || (k2 == 0 && k1 < 0)) continue;
        const auto c = f.coefficient(k1, k2);
        out << prefix << k1 << "," << k2 << "," << format_number(c.real()) << "," << format_number(c.imag())
            << "\r\n";
      }
  }
}

RunResult simulate(const config::RunConfig& cfg) {
  const models::ModelSpec spec = config::model_spec(cfg);
  models::ModelState s0;
  try {
    s0 = presets::initial_state(spec, cfg.initial, cfg.grid);
  } catch (const ContractError& e) {
    throw ConfigError(std::string("initial: ") + e.what());
  }
  RunResult result;
  result.columns = {"time", "energy"};
  for (const auto& inv : diagnostics::invariants(spec, s0)) result.columns.push_back(inv.name);
  try {
    result.trajectory = integrators::integrate(spec, s0, config::stepper_config(cfg));
  } catch (const integrators::IntegrationDiverged& e) {
    result.trajectory = e.partial();
    result.diverged_at = e.time();
    result.message = e.what();
  }
  return result;
}

void write_outputs(const config::RunConfig& cfg, RunResult& result) {
  const fs::path dir(cfg.output.directory);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());

  const fs::path series = dir / "series.csv";
  {
    auto out = open(series);
    write_series(out, result.columns, result.trajectory);
    if (!out) throw IoError("write failed for '" + series.string() + "'");
  }
  result.files.push_back(series.string());

  const Trajectory& traj = result.trajectory;
  if (cfg.output.snapshots == config::SnapshotPolicy::None || traj.empty()) return;
  std::vector<std::string> fields = cfg.output.fields;
  if (fields.empty()) fields = config::snapshot_fields(config::model_spec(cfg).id);
  const size_t first = cfg.output.snapshots == config::SnapshotPolicy::All ? 0 : traj.size() - 1;
  for (size_t i = first; i < traj.size(); ++i)
    for (const auto& field : fields) {
      const fs::path p = dir / snapshot_filename(traj.times[i], field);
      auto out = open(p);
      write_snapshot(out, traj.states[i], field, traj.times[i], cfg.output.grid, cfg.grid.n);
      if (!out) throw IoError("write failed for '" + p.string() + "'");
      result.files.push_back(p.string());
    }
}

RunResult run(const config::RunConfig& cfg) {
  RunResult result = simulate(cfg);
  write_outputs(cfg, result);
  return result;
}

}  // namespace ea::runner
