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

#include "euler_arnold/euler_arnold.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "ea/config.hpp"
#include "ea/errors.hpp"
#include "ea/models.hpp"
#include "ea/runner.hpp"
#include "ea/verification.hpp"

struct ea_config {
  ea::config::RunConfig cfg;
};

struct ea_run {
  ea::runner::RunResult result;
};

namespace {

thread_local std::string g_error;
thread_local int g_error_line = 0;

ea_status fail(ea_status s, const std::string& msg, int line = 0) {
  g_error = msg;
  g_error_line = line;
  return s;
}

// Maps exceptions escaping the C++ core to status codes.
template <class F>
ea_status guarded(F&& f) {
  try {
    return f();
  } catch (const ea::ConfigError& e) {
    return fail(EA_ERR_CONFIG, e.what(), e.line());
  } catch (const ea::runner::IoError& e) {
    return fail(EA_ERR_IO, e.what());
  } catch (const ea::ContractError& e) {
    return fail(EA_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(EA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(EA_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(EA_ERR_INTERNAL, "unknown error");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

struct CatalogEntry {
  std::string name, domain, state_shape, params, anchor;
};

const std::vector<CatalogEntry>& catalog_strings() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& m : ea::models::catalog()) {
      const char* domain = m.domain == ea::models::Domain::Circle  ? "circle"
                           : m.domain == ea::models::Domain::Torus ? "torus"
                                                                   : "algebra";
      out.push_back({std::string(m.name), domain, std::string(m.state_shape), std::string(m.params),
                     std::string(m.anchor)});
    }
    return out;
  }();
  return entries;
}

ea_status run_impl(const ea_config* config, ea_run** out, bool write) {
  if (!config || !out) return fail(EA_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto run = std::make_unique<ea_run>();
    run->result = ea::runner::simulate(config->cfg);
    if (write) ea::runner::write_outputs(config->cfg, run->result);
    const bool diverged = run->result.diverged_at.has_value();
    const std::string message = run->result.message;
    *out = run.release();
    return diverged ? fail(EA_ERR_DIVERGED, message) : EA_OK;
  });
}

}  // namespace

extern "C" {

const char* ea_version(void) { return "0.1.0"; }

const char* ea_status_name(ea_status status) {
  switch (status) {
    case EA_OK: return "ok";
    case EA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EA_ERR_CONFIG: return "config error";
    case EA_ERR_IO: return "I/O error";
    case EA_ERR_DIVERGED: return "integration diverged";
    case EA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ea_last_error(void) { return g_error.c_str(); }
int ea_last_error_line(void) { return g_error_line; }

void ea_string_free(char* s) { std::free(s); }

size_t ea_model_count(void) { return catalog_strings().size(); }

ea_status ea_model_info(size_t index, const char** name, const char** domain, const char** state_shape,
                        const char** params, const char** anchor) {
  const auto& c = catalog_strings();
  if (index >= c.size()) return fail(EA_ERR_INVALID_ARGUMENT, "model index out of range");
  if (name) *name = c[index].name.c_str();
  if (domain) *domain = c[index].domain.c_str();
  if (state_shape) *state_shape = c[index].state_shape.c_str();
  if (params) *params = c[index].params.c_str();
  if (anchor) *anchor = c[index].anchor.c_str();
  return EA_OK;
}

ea_status ea_config_parse(const char* text, ea_config** out) {
  if (!text || !out) return fail(EA_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ea_config{ea::config::parse_config(text)};
    return EA_OK;
  });
}

ea_status ea_config_load(const char* path, ea_config** out) {
  if (!path || !out) return fail(EA_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ea_config{ea::config::load_config(path)};
    return EA_OK;
  });
}

ea_status ea_config_dump(const ea_config* config, char** out) {
  if (!config || !out) return fail(EA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = duplicate(ea::config::dump_config(config->cfg));
    return EA_OK;
  });
}

ea_status ea_config_set_output_directory(ea_config* config, const char* directory) {
  if (!config || !directory) return fail(EA_ERR_INVALID_ARGUMENT, "null argument");
  if (!*directory) return fail(EA_ERR_INVALID_ARGUMENT, "empty output directory");
  return guarded([&] {
    config->cfg.output.directory = directory;
    return EA_OK;
  });
}

ea_status ea_config_equal(const ea_config* a, const ea_config* b, int* equal) {
  if (!a || !b || !equal) return fail(EA_ERR_INVALID_ARGUMENT, "null argument");
  *equal = a->cfg == b->cfg ? 1 : 0;
  return EA_OK;
}

void ea_config_free(ea_config* config) { delete config; }

ea_status ea_run_simulate(const ea_config* config, ea_run** out) { return run_impl(config, out, false); }
ea_status ea_run_execute(const ea_config* config, ea_run** out) { return run_impl(config, out, true); }
void ea_run_free(ea_run* run) { delete run; }

ea_status ea_run_diverged(const ea_run* run, int* diverged, double* time) {
  if (!run || !diverged) return fail(EA_ERR_INVALID_ARGUMENT, "null argument");
  *diverged = run->result.diverged_at ? 1 : 0;
  if (time) *time = run->result.diverged_at.value_or(0.0);
  return EA_OK;
}

size_t ea_run_record_count(const ea_run* run) { return run ? run->result.trajectory.size() : 0; }
size_t ea_run_column_count(const ea_run* run) { return run ? run->result.columns.size() : 0; }

ea_status ea_run_column_name(const ea_run* run, size_t column, const char** name) {
  if (!run || !name) return fail(EA_ERR_INVALID_ARGUMENT, "null argument");
  if (column >= run->result.columns.size()) return fail(EA_ERR_INVALID_ARGUMENT, "column out of range");
  *name = run->result.columns[column].c_str();
  return EA_OK;
}

ea_status ea_run_value(const ea_run* run, size_t record, size_t column, double* value) {
  if (!run || !value) return fail(EA_ERR_INVALID_ARGUMENT, "null argument");
  const auto& r = run->result;
  if (record >= r.trajectory.size()) return fail(EA_ERR_INVALID_ARGUMENT, "record out of range");
  if (column >= r.columns.size()) return fail(EA_ERR_INVALID_ARGUMENT, "column out of range");
  if (column == 0) {
    *value = r.trajectory.times[record];
    return EA_OK;
  }
  const auto& d = r.trajectory.diagnostics[record];
  const auto it = d.find(r.columns[column]);
  if (it == d.end()) return fail(EA_ERR_INTERNAL, "missing diagnostic '" + r.columns[column] + "'");
  *value = it->second;
  return EA_OK;
}

size_t ea_run_file_count(const ea_run* run) { return run ? run->result.files.size() : 0; }

ea_status ea_run_file(const ea_run* run, size_t index, const char** path) {
  if (!run || !path) return fail(EA_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= run->result.files.size()) return fail(EA_ERR_INVALID_ARGUMENT, "file index out of range");
  *path = run->result.files[index].c_str();
  return EA_OK;
}

ea_status ea_verify(const char* suite, int threads, ea_verify_callback callback, void* user, int* all_passed) {
  if (!suite) return fail(EA_ERR_INVALID_ARGUMENT, "null argument");
  namespace v = ea::verification;
  return guarded([&] {
    const v::Suite s = v::parse_suite(suite);
    bool ok = true;
    v::run_suite(s, threads, [&](const v::CriterionResult& r) {
      ok = ok && r.passed();
      if (!callback) return;
      const std::string summary = v::summary_line(r);
      std::string details;
      for (const auto& line : v::detail_lines(r)) details += line + "\n";
      ea_criterion_result c{r.id,          r.title.c_str(),    r.passed() ? 1 : 0, r.seconds, r.budget_seconds,
                            summary.c_str(), details.c_str(), r.error.c_str()};
      callback(&c, user);
    });
    if (all_passed) *all_passed = ok ? 1 : 0;
    return EA_OK;
  });
}

}  // extern "C"
