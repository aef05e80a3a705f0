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

// euler-arnold command line: run, verify, list-models.
// Links only against the C interface.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "euler_arnold/euler_arnold.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDiverged = 2;

int report_error(const char* context) {
  std::cerr << "euler-arnold: " << context << ": " << ea_last_error() << "\n";
  return kExitError;
}

int cmd_run(const std::string& path, bool dump) {
  ea_config* cfg = nullptr;
  if (ea_config_load(path.c_str(), &cfg) != EA_OK) return report_error(path.c_str());
  if (dump) {
    char* text = nullptr;
    const ea_status s = ea_config_dump(cfg, &text);
    ea_config_free(cfg);
    if (s != EA_OK) return report_error("dump-config");
    std::cout << text;
    ea_string_free(text);
    return kExitOk;
  }
  ea_run* run = nullptr;
  const ea_status s = ea_run_execute(cfg, &run);
  ea_config_free(cfg);
  if (s != EA_OK && s != EA_ERR_DIVERGED) return report_error(path.c_str());

  const size_t records = ea_run_record_count(run);
  double t_last = 0.0;
  if (records > 0) ea_run_value(run, records - 1, 0, &t_last);
  int code = kExitOk;
  if (s == EA_ERR_DIVERGED) {
    std::cerr << "euler-arnold: " << ea_last_error() << "\n";
    code = kExitDiverged;
  }
  std::cout << (code == kExitOk ? "completed" : "stopped") << " at t = " << t_last << " with " << records
            << " records\n";
  for (size_t i = 0; i < ea_run_file_count(run); ++i) {
    const char* file = nullptr;
    ea_run_file(run, i, &file);
    std::cout << "  wrote " << file << "\n";
  }
  ea_run_free(run);
  return code;
}

void print_result(const ea_criterion_result* r, void* verbose) {
  std::cout << r->summary << "\n";
  if (*static_cast<bool*>(verbose) || !r->passed) std::cout << r->details;
  std::cout.flush();
}

int cmd_verify(const std::string& suite, int threads, bool verbose) {
  int all_passed = 0;
  if (ea_verify(suite.c_str(), threads, print_result, &verbose, &all_passed) != EA_OK)
    return report_error("verify");
  std::cout << (all_passed ? "all criteria passed" : "some criteria FAILED") << "\n";
  return all_passed ? kExitOk : kExitError;
}

int cmd_list_models() {
  std::printf("%-22s %-8s %-28s %-26s %s\n", "id", "domain", "state", "params", "anchor");
  for (size_t i = 0; i < ea_model_count(); ++i) {
    const char *name, *domain, *shape, *params, *anchor;
    ea_model_info(i, &name, &domain, &shape, &params, &anchor);
    std::printf("%-22s %-8s %-28s %-26s %s\n", name, domain, shape, params, anchor);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler-Arnold solvers on Lie algebras, the circle and the 2-torus"};
  app.set_version_flag("--version", std::string(ea_version()));
  app.require_subcommand(1);

  std::string config_path;
  bool dump = false;
  auto* run = app.add_subcommand("run", "integrate the model described by a JSON config");
  run->add_option("config", config_path, "config file")->required();
  run->add_flag("--dump-config", dump, "print the canonical form of the config and exit");

  std::string suite;
  int threads = 0;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify", "run an acceptance suite: oracle, conservation, convergence, "
                                              "monitors or all");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("-j,--threads", threads, "worker threads (default: EA_NUM_THREADS or 1)");
  verify->add_flag("-v,--verbose", verbose, "print every measurement");

  auto* list = app.add_subcommand("list-models", "print the model catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  if (*run) return cmd_run(config_path, dump);
  if (*verify) return cmd_verify(suite, threads, verbose);
  if (*list) return cmd_list_models();
  return kExitError;
}
