// Copyright 2026 The weylmaps Authors
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

// Prints one pass/fail line per acceptance criterion.
// Usage: acceptance [--filter name[,name...]] [--seed N]

#include <cstdlib>
#include <iostream>
#include <string>

#include "acceptance/acceptance.hpp"

int main(int argc, char** argv) {
  weyl::acceptance::Options opts;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--filter" && k + 1 < argc) {
      opts.filter = argv[++k];
    } else if (arg == "--seed" && k + 1 < argc) {
      opts.seed = std::strtoull(argv[++k], nullptr, 10);
    } else {
      std::cerr << "usage: acceptance [--filter name[,name...]] [--seed N]\n";
      return 2;
    }
  }
  bool ok = true;
  int ran = 0;
  for (const auto& r : weyl::acceptance::run(opts)) {
    std::cout << weyl::acceptance::format(r) << std::endl;
    ok = ok && r.passed;
    ++ran;
  }
  if (ran == 0) {
    std::cerr << "no criterion matches filter \"" << opts.filter << "\"\n";
    return 2;
  }
  return ok ? 0 : 1;
}
