// Copyright 2026 The foldkappa Authors
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


#include <cstring>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "foldkappa/closedform.hpp"
#include "foldkappa/error.hpp"
#include "foldkappa/faultsim.hpp"
#include "foldkappa/foldkappa.h"
#include "foldkappa/report.hpp"
#include "foldkappa/topology.hpp"
#include "foldkappa/verify.hpp"

struct fk_topology {
  foldkappa::Topology topology;
};

struct fk_string {
  std::string text;
};

namespace {

thread_local std::string g_last_error;

fk_status fail(fk_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs fn, mapping exceptions onto status codes.
template <class Fn>
fk_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const foldkappa::ResourceExhausted& e) {
    return fail(FK_RESOURCE_EXHAUSTED, e.what());
  } catch (const std::out_of_range& e) {
    return fail(FK_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(FK_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FK_RESOURCE_EXHAUSTED, "out of memory");
  } catch (const std::exception& e) {
    return fail(FK_INTERNAL, e.what());
  } catch (...) {
    return fail(FK_INTERNAL, "unknown error");
  }
}

foldkappa::SearchBudget to_budget(const fk_budget* b) {
  foldkappa::SearchBudget out;
  if (b == nullptr) return out;
  out.max_nodes = b->max_nodes;
  out.time_limit = std::chrono::milliseconds(b->time_limit_ms);
  out.workers = b->workers < 1 ? 1 : b->workers;
  return out;
}

fk_string* make_string(std::string text) { return new fk_string{std::move(text)}; }

fk_verdict to_c(foldkappa::Verdict v) { return static_cast<fk_verdict>(static_cast<int>(v)); }

}  // namespace

extern "C" {

const char* fk_version(void) { return foldkappa::kToolVersion.data(); }

const char* fk_last_error(void) { return g_last_error.c_str(); }

const char* fk_status_name(fk_status status) {
  switch (status) {
    case FK_OK: return "ok";
    case FK_INVALID_ARGUMENT: return "invalid argument";
    case FK_OUT_OF_RANGE: return "out of range";
    case FK_RESOURCE_EXHAUSTED: return "resource exhausted";
    case FK_IO_ERROR: return "i/o error";
    case FK_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void fk_budget_init(fk_budget* budget) {
  if (budget == nullptr) return;
  const foldkappa::SearchBudget defaults;
  budget->max_nodes = defaults.max_nodes;
  budget->time_limit_ms = static_cast<uint64_t>(defaults.time_limit.count());
  budget->workers = defaults.workers;
}

const char* fk_string_data(const fk_string* s) { return s == nullptr ? "" : s->text.c_str(); }

size_t fk_string_size(const fk_string* s) { return s == nullptr ? 0 : s->text.size(); }

void fk_string_destroy(fk_string* s) { delete s; }

fk_status fk_topology_create(fk_kind kind, int n, fk_topology** out) {
  if (out == nullptr) return fail(FK_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  if (kind != FK_HYPERCUBE && kind != FK_FOLDED) return fail(FK_INVALID_ARGUMENT, "unknown kind");
  return guarded([&] {
    const auto k = kind == FK_FOLDED ? foldkappa::Kind::folded : foldkappa::Kind::hypercube;
    *out = new fk_topology{foldkappa::Topology::build(k, n)};
    return FK_OK;
  });
}

void fk_topology_destroy(fk_topology* t) { delete t; }

int fk_topology_dimension(const fk_topology* t) { return t ? t->topology.dimension() : 0; }

fk_kind fk_topology_kind(const fk_topology* t) {
  return t && t->topology.kind() == foldkappa::Kind::folded ? FK_FOLDED : FK_HYPERCUBE;
}

uint64_t fk_topology_vertex_count(const fk_topology* t) {
  return t ? t->topology.vertex_count() : 0;
}

uint64_t fk_topology_edge_count(const fk_topology* t) { return t ? t->topology.edge_count() : 0; }

int fk_topology_degree(const fk_topology* t) { return t ? t->topology.degree() : 0; }

fk_status fk_topology_export(const fk_topology* t, const char* format, fk_string** out) {
  if (t == nullptr || format == nullptr || out == nullptr) {
    return fail(FK_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    if (std::strcmp(format, "edgelist") == 0) {
      std::ostringstream text;
      foldkappa::write_edge_list(t->topology, text);
      *out = make_string(text.str());
    } else if (std::strcmp(format, "json") == 0) {
      *out = make_string(foldkappa::adjacency_json(t->topology));
    } else {
      return fail(FK_INVALID_ARGUMENT, std::string("unknown format: ") + format);
    }
    return FK_OK;
  });
}

fk_status fk_distance(const fk_topology* t, uint32_t u, uint32_t v, int* out) {
  if (t == nullptr || out == nullptr) return fail(FK_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = foldkappa::distance(t->topology, u, v);
    return FK_OK;
  });
}

fk_status fk_is_bipartite(const fk_topology* t, int* out) {
  if (t == nullptr || out == nullptr) return fail(FK_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = foldkappa::is_bipartite(t->topology) ? 1 : 0;
    return FK_OK;
  });
}

fk_status fk_odd_girth(const fk_topology* t, int* out) {
  if (t == nullptr || out == nullptr) return fail(FK_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = foldkappa::odd_girth(t->topology).value_or(-1);
    return FK_OK;
  });
}

fk_status fk_f_value(int n, int g, int64_t* out) {
  if (out == nullptr) return fail(FK_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = foldkappa::closedform::f(n, g).value;
    return FK_OK;
  });
}

fk_status fk_theta_report(const fk_topology* t, int g, const char* mode, const fk_budget* budget,
                          fk_verdict* verdict, fk_string** json_out) {
  if (t == nullptr || mode == nullptr || json_out == nullptr) {
    return fail(FK_INVALID_ARGUMENT, "null argument");
  }
  *json_out = nullptr;
  const auto parsed = foldkappa::parse_theta_mode(mode);
  if (!parsed) return fail(FK_INVALID_ARGUMENT, std::string("unknown theta mode: ") + mode);
  return guarded([&] {
    const foldkappa::Report r = foldkappa::theta_report(t->topology, g, *parsed, to_budget(budget));
    if (verdict) *verdict = to_c(r.verdict);
    *json_out = make_string(r.to_json_line());
    return FK_OK;
  });
}

fk_status fk_ckappa_report(const fk_topology* t, int g, const char* mode, const fk_budget* budget,
                           int max_union, fk_verdict* verdict, fk_string** json_out) {
  if (t == nullptr || mode == nullptr || json_out == nullptr) {
    return fail(FK_INVALID_ARGUMENT, "null argument");
  }
  *json_out = nullptr;
  const auto parsed = foldkappa::parse_ckappa_mode(mode);
  if (!parsed) return fail(FK_INVALID_ARGUMENT, std::string("unknown ckappa mode: ") + mode);
  if (max_union < 0) return fail(FK_OUT_OF_RANGE, "max_union must be non-negative");
  return guarded([&] {
    foldkappa::CkappaOptions options;
    options.budget = to_budget(budget);
    options.max_union = max_union;
    const foldkappa::Report r = foldkappa::ckappa_report(t->topology, g, *parsed, options);
    if (verdict) *verdict = to_c(r.verdict);
    *json_out = make_string(r.to_json_line());
    return FK_OK;
  });
}

fk_status fk_verify(const char* suite, int n_first, int n_last, uint64_t seed,
                    const fk_budget* budget, fk_report_sink sink, void* user,
                    uint64_t* fail_count) {
  if (suite == nullptr || sink == nullptr) return fail(FK_INVALID_ARGUMENT, "null argument");
  const auto parsed = foldkappa::parse_suite(suite);
  if (!parsed) return fail(FK_INVALID_ARGUMENT, std::string("unknown suite: ") + suite);
  return guarded([&] {
    foldkappa::VerifyOptions options;
    options.n_first = n_first;
    options.n_last = n_last;
    options.seed = seed;
    if (budget != nullptr) options.budget = to_budget(budget);
    const foldkappa::VerifySummary summary =
        foldkappa::run_verify(*parsed, options, [&](const foldkappa::Report& r) {
          const std::string line = r.to_json_line();
          sink(line.c_str(), user);
        });
    if (fail_count) *fail_count = summary.failures();
    return FK_OK;
  });
}

fk_status fk_faultsim_csv(const fk_topology* t, uint64_t fault_count, uint64_t trials,
                          uint64_t seed, int workers, fk_string** csv_out,
                          uint64_t* mass_violations) {
  if (t == nullptr || csv_out == nullptr) return fail(FK_INVALID_ARGUMENT, "null argument");
  *csv_out = nullptr;
  return guarded([&] {
    const foldkappa::FaultTrialStats stats =
        foldkappa::simulate(t->topology, fault_count, trials, seed, workers);
    if (mass_violations) *mass_violations = stats.mass_violations;
    *csv_out = make_string(foldkappa::to_csv(stats));
    return FK_OK;
  });
}

fk_status fk_threshold_report(const fk_topology* t, int g_max, uint64_t trials, uint64_t seed,
                              int workers, fk_verdict* verdict, fk_string** json_out) {
  if (t == nullptr || json_out == nullptr) return fail(FK_INVALID_ARGUMENT, "null argument");
  *json_out = nullptr;
  return guarded([&] {
    const foldkappa::Report r =
        foldkappa::threshold_report(t->topology, g_max, trials, seed, workers);
    if (verdict) *verdict = to_c(r.verdict);
    *json_out = make_string(r.to_json_line());
    return FK_OK;
  });
}

}  // extern "C"
