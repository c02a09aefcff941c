// Copyright 2026 The qconc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end; all computation goes through the C API in
// qconc/qconc.h.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qconc/qconc.h"

namespace {

int status_to_exit(qconc_status status) {
  switch (status) {
    case QCONC_OK:
      return 0;
    case QCONC_ERR_IO:
      return 2;
    default:
      return 1;  // domain and numerical errors
  }
}

int fail(qconc_status status) {
  std::cerr << "error: " << qconc_last_error() << "\n";
  return status_to_exit(status);
}

struct StateHandle {
  qconc_state* ptr = nullptr;
  ~StateHandle() { qconc_state_free(ptr); }
};

struct StringOut {
  char* ptr = nullptr;
  ~StringOut() { qconc_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

void print_json(const std::string& text, bool pretty) {
  if (!pretty) {
    std::cout << text << "\n";
    return;
  }
  std::cout << nlohmann::ordered_json::parse(text).dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multipartite concurrence and mixed-state lower bounds"};
  app.set_version_flag("--version", std::string(qconc_version()));
  app.require_subcommand(1);

  // concurrence
  std::string conc_state_path;
  std::string conc_partition;
  auto* conc = app.add_subcommand(
      "concurrence", "exact concurrence of a pure state (value and squared value)");
  conc->add_option("--state", conc_state_path, "state JSON file")->required();
  conc->add_option("--partition", conc_partition, "partition such as \"1|2|34\" (default: finest)");

  // bound
  std::string bound_state_path, bound_method, bound_providers = "best", bound_tri = "best";
  std::string bound_scheme_path;
  bool bound_pretty = false;
  auto* bound = app.add_subcommand("bound", "mixed-state lower bound report (JSON)");
  bound->add_option("--state", bound_state_path, "state JSON file")->required();
  bound->add_option("--method", bound_method, "theorem1|theorem2|corollary1|delta|scheme")
      ->required();
  bound->add_option("--providers", bound_providers, "comma list of ppt,ccnr,wootters (or best)");
  bound->add_option("--tri", bound_tri, "tripartite terms for theorem1: relation|theorem2|best");
  bound->add_option("--scheme", bound_scheme_path, "weight scheme JSON file (method scheme)");
  bound->add_flag("--pretty", bound_pretty, "indent the JSON report");

  // partitions
  int part_n = 0, part_m = 0;
  std::string part_realized, part_compose, part_objective = "max_total";
  auto* parts = app.add_subcommand("partitions", "set-partition tools");
  parts->add_option("--n", part_n, "number of subsystems")->required();
  parts->add_option("--m", part_m, "list all M-block partitions");
  parts->add_option("--realized", part_realized, "print the block unions of this partition");
  parts->add_option("--compose", part_compose,
                    "comma-separated family; compute maximal valid weights");
  parts->add_option("--objective", part_objective, "max_uniform|max_total (with --compose)");

  // verify-scheme
  int verify_n = 0;
  std::string verify_scheme_path;
  bool verify_pretty = false;
  auto* verify = app.add_subcommand("verify-scheme", "coverage slack of a weight scheme");
  verify->add_option("--scheme", verify_scheme_path, "scheme JSON file")->required();
  verify->add_option("--n", verify_n, "expected number of subsystems (cross-checked)");
  verify->add_flag("--pretty", verify_pretty, "indent the JSON report");

  // example
  auto* example = app.add_subcommand("example", "built-in one-parameter four-qubit family");
  example->require_subcommand(1);
  double ex_t = 0.0;
  std::string ex_providers = "best";
  bool ex_pretty = false;
  auto* ex_point = example->add_subcommand("point", "evaluate one grid point (JSON)");
  ex_point->add_option("--t", ex_t, "mixing parameter in [0,1]")->required();
  ex_point->add_option("--providers", ex_providers, "bipartite providers for engine columns");
  ex_point->add_flag("--pretty", ex_pretty, "indent the JSON");

  double sw_from = 0.0, sw_to = 1.0;
  int sw_steps = 101, sw_jobs = 0;
  std::string sw_out, sw_providers = "best";
  auto* ex_sweep = example->add_subcommand("sweep", "write a CSV over a t grid");
  ex_sweep->add_option("--from", sw_from, "grid start (default 0)");
  ex_sweep->add_option("--to", sw_to, "grid end (default 1)");
  ex_sweep->add_option("--steps", sw_steps, "grid points (default 101)");
  ex_sweep->add_option("--out", sw_out, "output CSV path")->required();
  ex_sweep->add_option("--providers", sw_providers, "bipartite providers for engine columns");
  ex_sweep->add_option("--jobs", sw_jobs, "worker threads (default: available parallelism)");

  // selftest
  std::uint64_t st_seed = 42;
  auto* selftest = app.add_subcommand("selftest", "run every invariant suite");
  selftest->add_option("--seed", st_seed, "random seed (default 42)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help/version or the usage error
    return code == 0 ? 0 : 1;
  }

  if (conc->parsed()) {
    StateHandle state;
    qconc_status status = qconc_state_load(conc_state_path.c_str(), &state.ptr);
    if (status != QCONC_OK) return fail(status);
    double value = 0, squared = 0;
    status = qconc_concurrence(state.ptr, conc_partition.empty() ? nullptr : conc_partition.c_str(),
                               &value, &squared);
    if (status != QCONC_OK) return fail(status);
    std::printf("%.12g %.12g\n", value, squared);
    return 0;
  }

  if (bound->parsed()) {
    StateHandle state;
    qconc_status status = qconc_state_load(bound_state_path.c_str(), &state.ptr);
    if (status != QCONC_OK) return fail(status);
    std::string scheme_json;
    if (!bound_scheme_path.empty()) {
      std::FILE* f = std::fopen(bound_scheme_path.c_str(), "rb");
      if (!f) {
        std::cerr << "error: cannot open scheme file '" << bound_scheme_path << "'\n";
        return 2;
      }
      char buf[4096];
      size_t got;
      while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) scheme_json.append(buf, got);
      std::fclose(f);
    }
    StringOut report;
    status = qconc_bound(state.ptr, bound_method.c_str(), bound_providers.c_str(),
                         bound_tri.c_str(), scheme_json.empty() ? nullptr : scheme_json.c_str(),
                         &report.ptr);
    if (status != QCONC_OK) return fail(status);
    print_json(report.str(), bound_pretty);
    return 0;
  }

  if (parts->parsed()) {
    if (!part_realized.empty()) {
      StringOut lines;
      qconc_status status = qconc_realized_subsets(part_n, part_realized.c_str(), &lines.ptr);
      if (status != QCONC_OK) return fail(status);
      std::cout << lines.str();
      return 0;
    }
    if (!part_compose.empty()) {
      StringOut scheme;
      qconc_status status =
          qconc_compose_weights(part_n, part_compose.c_str(), part_objective.c_str(), &scheme.ptr);
      if (status != QCONC_OK) return fail(status);
      std::cout << scheme.str() << "\n";
      return 0;
    }
    if (part_m == 0) {
      std::cerr << "error: pass --m, --realized or --compose\n";
      return 1;
    }
    StringOut lines;
    qconc_status status = qconc_enumerate_partitions(part_n, part_m, &lines.ptr);
    if (status != QCONC_OK) return fail(status);
    std::cout << lines.str();
    return 0;
  }

  if (verify->parsed()) {
    std::FILE* f = std::fopen(verify_scheme_path.c_str(), "rb");
    if (!f) {
      std::cerr << "error: cannot open scheme file '" << verify_scheme_path << "'\n";
      return 2;
    }
    std::string scheme_json;
    char buf[4096];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) scheme_json.append(buf, got);
    std::fclose(f);
    if (verify_n > 0) {
      const auto parsed = nlohmann::json::parse(scheme_json, nullptr, false);
      if (parsed.is_discarded() || !parsed.contains("n") || parsed["n"].get<int>() != verify_n) {
        std::cerr << "error: scheme file does not declare n=" << verify_n << "\n";
        return 1;
      }
    }
    StringOut report;
    qconc_status status = qconc_verify_scheme(scheme_json.c_str(), &report.ptr);
    if (status != QCONC_OK) return fail(status);
    print_json(report.str(), verify_pretty);
    return 0;
  }

  if (ex_point->parsed()) {
    StringOut json;
    qconc_status status = qconc_example_point(ex_t, ex_providers.c_str(), &json.ptr);
    if (status != QCONC_OK) return fail(status);
    print_json(json.str(), ex_pretty);
    return 0;
  }

  if (ex_sweep->parsed()) {
    qconc_status status = qconc_example_sweep(sw_from, sw_to, sw_steps, sw_providers.c_str(),
                                              sw_jobs, sw_out.c_str());
    if (status != QCONC_OK) return fail(status);
    std::cout << "wrote " << sw_steps << " rows to " << sw_out << "\n";
    return 0;
  }

  if (selftest->parsed()) {
    StringOut report;
    qconc_status status = qconc_selftest(st_seed, &report.ptr);
    std::cout << report.str();
    return status == QCONC_OK ? 0 : 1;
  }

  return 0;
}
