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

// Acceptance binary: one PASS/FAIL line per criterion, measurements below
// each line. Tolerances are pinned in the verification module. Exit code 0
// iff every criterion passes.

#include <cstdio>
#include <cstring>

#include "euler_arnold/euler_arnold.h"

namespace {

void print(const ea_criterion_result* r, void*) {
  std::printf("%s\n%s", r->summary, r->details);
  if (r->error && *r->error) std::printf("    error: %s\n", r->error);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  const char* suite = argc > 1 ? argv[1] : "all";
  int all_passed = 0;
  if (ea_verify(suite, 0, print, nullptr, &all_passed) != EA_OK) {
    std::fprintf(stderr, "acceptance: %s\n", ea_last_error());
    return 1;
  }
  std::printf("%s\n", all_passed ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all_passed ? 0 : 1;
}
