// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one deterministic pass/fail line per criterion on stdout,
// progress and timings on stderr. Exits 0 iff every requested criterion
// passes.
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include "brody/acceptance.hpp"
#include "brody/parallel.hpp"
#include "brody/types.hpp"

#ifndef BRODY_DATA_DIR
#define BRODY_DATA_DIR "data"
#endif

namespace {

int usage(const char* argv0) {
  std::cerr << "usage: " << argv0
            << " [--criteria 1,2,...] [--data-dir DIR] [--seed N] [--threads N]\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  brody::AcceptanceOptions opts;
  opts.data_dir = BRODY_DATA_DIR;
  {
    std::ostringstream self;
    self << '"' << argv[0] << '"';
    opts.self_command = self.str();
  }
  int threads = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    const char* val = i + 1 < argc ? argv[i + 1] : nullptr;
    if (arg == "--criteria" && val) {
      ++i;
      std::stringstream ss(val);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          opts.criteria.push_back(std::stoi(tok));
        } catch (...) {
          return usage(argv[0]);
        }
      }
    } else if (arg == "--data-dir" && val) {
      ++i;
      opts.data_dir = val;
    } else if (arg == "--seed" && val) {
      ++i;
      try {
        opts.seed = std::stoull(val);
      } catch (...) {
        return usage(argv[0]);
      }
    } else if (arg == "--threads" && val) {
      ++i;
      try {
        threads = std::stoi(val);
      } catch (...) {
        return usage(argv[0]);
      }
    } else {
      return usage(argv[0]);
    }
  }
  if (threads > 0) brody::set_thread_count(threads);

  try {
    std::vector<brody::CriterionResult> results =
        brody::run_acceptance(opts, std::cout, std::cerr);
    bool all = !results.empty() &&
               std::all_of(results.begin(), results.end(),
                           [](const brody::CriterionResult& r) { return r.pass; });
    return all ? 0 : 1;
  } catch (const brody::Error& e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return 1;
  }
}
