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

#include "qconc/qconc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "bounds.hpp"
#include "concurrence.hpp"
#include "example_family.hpp"
#include "random.hpp"
#include "selftest.hpp"
#include "state_io.hpp"
#include "version.hpp"

struct qconc_state {
  qconc::LoadedState loaded;
};

namespace {

thread_local std::string g_last_error;

qconc_status set_error(const qconc::Error& e) {
  g_last_error = e.what();
  switch (e.kind()) {
    case qconc::ErrorKind::domain:
      return QCONC_ERR_DOMAIN;
    case qconc::ErrorKind::io:
      return QCONC_ERR_IO;
    case qconc::ErrorKind::numerical:
      return QCONC_ERR_NUMERICAL;
  }
  return QCONC_ERR_DOMAIN;
}

qconc_status set_error_msg(const char* msg) {
  g_last_error = msg;
  return QCONC_ERR_DOMAIN;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
qconc_status guarded(Fn&& fn) {
  try {
    fn();
    return QCONC_OK;
  } catch (const qconc::Error& e) {
    return set_error(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QCONC_ERR_DOMAIN;
  }
}

std::string report_to_json(const qconc::BoundReport& report) {
  nlohmann::ordered_json contributions = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.contributions) contributions[key] = value;
  nlohmann::ordered_json j;
  j["method"] = report.method;
  j["value"] = report.value;
  j["squared"] = report.squared;
  j["contributions"] = contributions;
  return j.dump();
}

qconc::BoundReport dispatch_bound(const qconc::DensityMatrix& rho, const std::string& method,
                                  const qconc::ProviderSet& providers,
                                  const std::string& tri_method, const char* scheme_json) {
  using namespace qconc;
  if (method == "theorem1") {
    TriMethod tm = TriMethod::best;
    if (tri_method == "relation")
      tm = TriMethod::relation;
    else if (tri_method == "theorem2")
      tm = TriMethod::theorem2;
    else if (!tri_method.empty() && tri_method != "best")
      throw_domain("unknown tri method '" + tri_method + "' (relation, theorem2 or best)");
    return four_party_bound(rho, tm, providers);
  }
  if (method == "theorem2") return level_pair_bound(rho, providers);
  if (method == "corollary1") return four_qubit_substate_bound(rho, providers);
  if (method == "delta") return bipartition_sum_bound(rho, providers);
  if (method == "scheme") {
    if (scheme_json == nullptr || *scheme_json == '\0')
      throw_domain("method 'scheme' needs a scheme JSON");
    return scheme_bound(rho, scheme_from_json(scheme_json), providers);
  }
  throw_domain("unknown bound method '" + method +
               "' (theorem1, theorem2, corollary1, delta or scheme)");
}

}  // namespace

extern "C" {

const char* qconc_version(void) { return qconc::kVersion; }

const char* qconc_last_error(void) { return g_last_error.c_str(); }

void qconc_string_free(char* s) { std::free(s); }

void qconc_state_free(qconc_state* s) { delete s; }

qconc_status qconc_state_load(const char* path, qconc_state** out) {
  if (!path || !out) return set_error_msg("null argument");
  return guarded([&] { *out = new qconc_state{qconc::load_state_file(path)}; });
}

qconc_status qconc_state_parse(const char* json_text, qconc_state** out) {
  if (!json_text || !out) return set_error_msg("null argument");
  return guarded([&] { *out = new qconc_state{qconc::parse_state_json(json_text)}; });
}

qconc_status qconc_state_random_pure(const int32_t* dims, int32_t ndims, uint64_t seed,
                                     qconc_state** out) {
  if (!dims || !out || ndims < 1) return set_error_msg("null or empty dims");
  return guarded([&] {
    std::vector<int> d(dims, dims + ndims);
    qconc::PureState psi = qconc::random_pure(qconc::SystemShape(d), seed);
    *out = new qconc_state{qconc::LoadedState{std::move(psi)}};
  });
}

qconc_status qconc_state_to_json(const qconc_state* s, char** json_out) {
  if (!s || !json_out) return set_error_msg("null argument");
  return guarded([&] {
    *json_out = dup_string(s->loaded.is_pure() ? qconc::state_to_json(s->loaded.pure())
                                               : qconc::state_to_json(s->loaded.as_density()));
  });
}

int32_t qconc_state_num_systems(const qconc_state* s) {
  return s ? s->loaded.shape().num_systems() : 0;
}

qconc_status qconc_state_dims(const qconc_state* s, int32_t* dims_out, int32_t cap) {
  if (!s || !dims_out) return set_error_msg("null argument");
  const auto& dims = s->loaded.shape().dims;
  if (cap < static_cast<int32_t>(dims.size())) return set_error_msg("dims buffer too small");
  for (size_t i = 0; i < dims.size(); ++i) dims_out[i] = dims[i];
  return QCONC_OK;
}

int32_t qconc_state_is_pure(const qconc_state* s) { return s && s->loaded.is_pure() ? 1 : 0; }

qconc_status qconc_concurrence(const qconc_state* s, const char* partition, double* value,
                               double* squared) {
  if (!s || !value || !squared) return set_error_msg("null argument");
  return guarded([&] {
    const qconc::PureState& psi = s->loaded.pure();
    qconc::ConcurrenceValue c;
    if (partition == nullptr || *partition == '\0') {
      c = qconc::concurrence_full(psi);
    } else {
      const qconc::Partition p =
          qconc::parse_partition(partition, psi.shape.num_systems());
      c = qconc::concurrence_partition(psi, p);
    }
    *value = c.value;
    *squared = c.squared;
  });
}

qconc_status qconc_bound(const qconc_state* s, const char* method, const char* providers,
                         const char* tri_method, const char* scheme_json,
                         char** report_json_out) {
  if (!s || !method || !report_json_out) return set_error_msg("null argument");
  return guarded([&] {
    const qconc::DensityMatrix rho = s->loaded.as_density();
    const qconc::ProviderSet p = qconc::ProviderSet::parse(providers ? providers : "best");
    const qconc::BoundReport report =
        dispatch_bound(rho, method, p, tri_method ? tri_method : "", scheme_json);
    *report_json_out = dup_string(report_to_json(report));
  });
}

qconc_status qconc_enumerate_partitions(int32_t n, int32_t m, char** lines_out) {
  if (!lines_out) return set_error_msg("null argument");
  return guarded([&] {
    std::string text;
    for (const qconc::Partition& p : qconc::enumerate_partitions(n, m))
      text += p.to_string() + "\n";
    *lines_out = dup_string(text);
  });
}

qconc_status qconc_realized_subsets(int32_t n, const char* partition, char** lines_out) {
  if (!partition || !lines_out) return set_error_msg("null argument");
  return guarded([&] {
    const qconc::Partition p = qconc::parse_partition(partition, n);
    std::string text;
    for (qconc::SubsetMask a : qconc::realized_subsets(p))
      text += qconc::mask_to_string(a) + "\n";
    *lines_out = dup_string(text);
  });
}

qconc_status qconc_verify_scheme(const char* scheme_json, char** report_json_out) {
  if (!scheme_json || !report_json_out) return set_error_msg("null argument");
  return guarded([&] {
    const qconc::WeightScheme scheme = qconc::scheme_from_json(scheme_json);
    const qconc::SlackReport report = qconc::verify_weights(scheme.n, scheme);
    *report_json_out = dup_string(qconc::slack_report_to_json(report));
  });
}

qconc_status qconc_compose_weights(int32_t n, const char* partitions_csv, const char* objective,
                                   char** scheme_json_out) {
  if (!partitions_csv || !scheme_json_out) return set_error_msg("null argument");
  return guarded([&] {
    std::vector<qconc::Partition> family;
    std::string token;
    const std::string csv = partitions_csv;
    for (size_t i = 0; i <= csv.size(); ++i) {
      if (i == csv.size() || csv[i] == ',') {
        if (!token.empty()) family.push_back(qconc::parse_partition(token, n));
        token.clear();
      } else if (!std::isspace(static_cast<unsigned char>(csv[i]))) {
        token += csv[i];
      }
    }
    const std::string obj = objective ? objective : "max_total";
    qconc::ComposeObjective co;
    if (obj == "max_uniform")
      co = qconc::ComposeObjective::max_uniform;
    else if (obj == "max_total")
      co = qconc::ComposeObjective::max_total;
    else
      qconc::throw_domain("unknown objective '" + obj + "' (max_uniform or max_total)");
    const qconc::ComposeResult result = qconc::compose_weights(n, family, co);

    nlohmann::ordered_json j = nlohmann::ordered_json::parse(scheme_to_json(result.scheme));
    j["objective"] = obj;
    j["total_weight"] = qconc::to_fraction_string(result.total_weight);
    j["profile_uniform"] = result.profile_uniform;
    *scheme_json_out = dup_string(j.dump());
  });
}

qconc_status qconc_example_point(double t, const char* providers, char** json_out) {
  if (!json_out) return set_error_msg("null argument");
  return guarded([&] {
    const qconc::ProviderSet p = qconc::ProviderSet::parse(providers ? providers : "best");
    *json_out = dup_string(qconc::example_point_to_json(qconc::evaluate_example_point(t, p)));
  });
}

qconc_status qconc_example_sweep(double t_min, double t_max, int32_t steps, const char* providers,
                                 int32_t jobs, const char* out_path) {
  if (!out_path) return set_error_msg("null argument");
  return guarded([&] {
    const qconc::ProviderSet p = qconc::ProviderSet::parse(providers ? providers : "best");
    qconc::sweep_example(t_min, t_max, steps, p, jobs, out_path);
  });
}

qconc_status qconc_selftest(uint64_t seed, char** report_out) {
  try {
    const std::vector<qconc::CheckResult> results = qconc::run_selftest(seed);
    if (report_out) *report_out = dup_string(qconc::format_selftest_report(results));
    if (qconc::all_passed(results)) return QCONC_OK;
    g_last_error = "selftest failed";
    return QCONC_ERR_NUMERICAL;
  } catch (const qconc::Error& e) {
    return set_error(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QCONC_ERR_DOMAIN;
  }
}

}  // extern "C"
