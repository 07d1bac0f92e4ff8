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


// foldkappa command-line front end. Talks to the library only through the
// C interface.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "foldkappa/foldkappa.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError {
  std::string message;
};

struct Common {
  std::string kind;
  int n = 0;
  int g = 0;
  std::string mode = "exact";
  std::string out;
  std::uint64_t seed = 0;
  int workers = 0;
  std::uint64_t max_nodes = 0;
  std::uint64_t time_limit_ms = 0;
  int max_union = 0;
  bool pretty = false;
  std::string suite = "all";
  std::string n_range;
  std::uint64_t faults = 0;
  std::uint64_t trials = 1000;
  int g_max = 0;
  std::string format = "edgelist";
};

int default_workers() {
  if (const char* env = std::getenv("FOLDKAPPA_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    throw UsageError{"FOLDKAPPA_WORKERS must be a positive integer"};
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int resolve_workers(const Common& c) { return c.workers > 0 ? c.workers : default_workers(); }

fk_budget make_budget(const Common& c) {
  fk_budget b;
  fk_budget_init(&b);
  if (c.max_nodes > 0) b.max_nodes = c.max_nodes;
  b.time_limit_ms = c.time_limit_ms;
  b.workers = resolve_workers(c);
  return b;
}

fk_kind parse_kind(const std::string& s) {
  if (s == "fq" || s == "folded") return FK_FOLDED;
  if (s == "q" || s == "hypercube") return FK_HYPERCUBE;
  throw UsageError{"--kind must be fq or q, got '" + s + "'"};
}

// "a..b" inclusive, or a single dimension.
std::pair<int, int> parse_range(const std::string& s) {
  try {
    const auto dots = s.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int n = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {n, n};
    }
    const std::string lo = s.substr(0, dots);
    const std::string hi = s.substr(dots + 2);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(s);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(s);
    if (a > b) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError{"--n must be N or A..B with A <= B, got '" + s + "'"};
  }
}

int status_exit(fk_status s) {
  std::cerr << "foldkappa: " << fk_status_name(s) << ": " << fk_last_error() << "\n";
  switch (s) {
    case FK_IO_ERROR: return kExitIo;
    case FK_INTERNAL: return kExitFail;
    default: return kExitUsage;
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::out | std::ios::trunc);
      if (!file_) throw std::ios_base::failure("cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw std::ios_base::failure("write failed");
  }

 private:
  std::ofstream file_;
};

void pretty_line(const std::string& line) {
  const nlohmann::json j = nlohmann::json::parse(line);
  std::cerr << j.value("verdict", std::string("?")) << "  " << j.value("claim_id", std::string())
            << "  computed=" << j["computed"].dump();
  if (!j["expected"].is_null()) std::cerr << "  expected=" << j["expected"].dump();
  std::cerr << "\n";
}

struct Topo {
  fk_topology* ptr = nullptr;
  ~Topo() { fk_topology_destroy(ptr); }
};

struct Str {
  fk_string* ptr = nullptr;
  ~Str() { fk_string_destroy(ptr); }
  std::string text() const { return std::string(fk_string_data(ptr), fk_string_size(ptr)); }
};

int emit_report(const Common& c, const Str& s, fk_verdict verdict) {
  Output out(c.out);
  out.stream() << s.text() << "\n";
  out.finish();
  if (c.pretty) pretty_line(s.text());
  return verdict == FK_VERDICT_FAIL ? kExitFail : kExitOk;
}

int run_gen(const Common& c) {
  Topo t;
  if (fk_status s = fk_topology_create(parse_kind(c.kind), c.n, &t.ptr)) return status_exit(s);
  Str text;
  if (fk_status s = fk_topology_export(t.ptr, c.format.c_str(), &text.ptr)) return status_exit(s);
  Output out(c.out);
  out.stream() << text.text();
  out.finish();
  return kExitOk;
}

int run_theta(const Common& c) {
  Topo t;
  if (fk_status s = fk_topology_create(parse_kind(c.kind), c.n, &t.ptr)) return status_exit(s);
  const fk_budget budget = make_budget(c);
  Str report;
  fk_verdict verdict = FK_VERDICT_FINDING;
  if (fk_status s = fk_theta_report(t.ptr, c.g, c.mode.c_str(), &budget, &verdict, &report.ptr)) {
    return status_exit(s);
  }
  return emit_report(c, report, verdict);
}

int run_ckappa(const Common& c) {
  Topo t;
  if (fk_status s = fk_topology_create(parse_kind(c.kind), c.n, &t.ptr)) return status_exit(s);
  const fk_budget budget = make_budget(c);
  Str report;
  fk_verdict verdict = FK_VERDICT_FINDING;
  if (fk_status s = fk_ckappa_report(t.ptr, c.g, c.mode.c_str(), &budget, c.max_union, &verdict,
                                     &report.ptr)) {
    return status_exit(s);
  }
  return emit_report(c, report, verdict);
}

struct VerifyContext {
  std::ostream* out;
  bool pretty;
};

void verify_sink(const char* line, void* user) {
  auto* ctx = static_cast<VerifyContext*>(user);
  *ctx->out << line << "\n";
  ctx->out->flush();
  if (ctx->pretty) pretty_line(line);
}

int run_verify(const Common& c) {
  const auto [lo, hi] = parse_range(c.n_range);
  const fk_budget budget = make_budget(c);
  Output out(c.out);
  VerifyContext ctx{&out.stream(), c.pretty};
  std::uint64_t failures = 0;
  if (fk_status s = fk_verify(c.suite.c_str(), lo, hi, c.seed, &budget, verify_sink, &ctx,
                              &failures)) {
    return status_exit(s);
  }
  out.finish();
  if (c.pretty) std::cerr << failures << " FAIL\n";
  return failures > 0 ? kExitFail : kExitOk;
}

int run_faultsim(const Common& c) {
  Topo t;
  if (fk_status s = fk_topology_create(parse_kind(c.kind), c.n, &t.ptr)) return status_exit(s);
  const int workers = resolve_workers(c);
  if (c.g_max > 0) {
    Str report;
    fk_verdict verdict = FK_VERDICT_FINDING;
    if (fk_status s = fk_threshold_report(t.ptr, c.g_max, c.trials, c.seed, workers, &verdict,
                                          &report.ptr)) {
      return status_exit(s);
    }
    return emit_report(c, report, verdict);
  }
  Str csv;
  std::uint64_t mass_violations = 0;
  if (fk_status s = fk_faultsim_csv(t.ptr, c.faults, c.trials, c.seed, workers, &csv.ptr,
                                    &mass_violations)) {
    return status_exit(s);
  }
  Output out(c.out);
  out.stream() << csv.text();
  out.finish();
  if (c.pretty) std::cerr << csv.text();
  if (mass_violations > 0) {
    std::cerr << "foldkappa: " << mass_violations << " trials broke component mass conservation\n";
    return kExitFail;
  }
  return kExitOk;
}

void add_budget_flags(CLI::App* app, Common& c) {
  app->add_option("--workers", c.workers, "Worker threads (default: FOLDKAPPA_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
  app->add_option("--max-nodes", c.max_nodes, "Search node budget");
  app->add_option("--time-limit-ms", c.time_limit_ms, "Wall-clock search limit, 0 for none");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Component connectivity of hypercubes and folded hypercubes"};
  app.set_version_flag("--version", std::string(fk_version()));
  app.require_subcommand(1);
  Common c;

  auto* gen = app.add_subcommand("gen", "Write a topology as an edge list or JSON adjacency");
  gen->add_option("--kind", c.kind, "fq or q")->required();
  gen->add_option("--n", c.n, "Dimension")->required();
  gen->add_option("--format", c.format, "edgelist or json");
  gen->add_option("--out", c.out, "Output file (default stdout)");

  auto* theta = app.add_subcommand("theta", "Minimum neighbourhood of a g-vertex set");
  theta->add_option("--kind", c.kind, "fq or q")->required();
  theta->add_option("--n", c.n, "Dimension")->required();
  theta->add_option("--g", c.g, "Set size")->required();
  theta->add_option("--mode", c.mode, "exact, star or formula");
  theta->add_option("--out", c.out, "Output file (default stdout)");
  theta->add_flag("--pretty", c.pretty, "Summary table on stderr");
  add_budget_flags(theta, c);

  auto* ckappa = app.add_subcommand("ckappa", "Smallest cut leaving at least g + 1 components");
  ckappa->add_option("--kind", c.kind, "fq or q")->required();
  ckappa->add_option("--n", c.n, "Dimension")->required();
  ckappa->add_option("--g", c.g, "Cut target is g + 1 components")->required();
  ckappa->add_option("--mode", c.mode, "exact, upper or formula");
  ckappa->add_option("--max-union", c.max_union, "Largest union tried by the exact search");
  ckappa->add_option("--out", c.out, "Output file (default stdout)");
  ckappa->add_flag("--pretty", c.pretty, "Summary table on stderr");
  add_budget_flags(ckappa, c);

  auto* verify = app.add_subcommand("verify", "Run property suites, one JSON report per claim");
  verify->add_option("--suite", c.suite, "lemmas, theta, ckappa, structure or all");
  verify->add_option("--n", c.n_range, "Dimension or inclusive range A..B")->required();
  verify->add_option("--seed", c.seed, "Seed for sampled checks");
  verify->add_option("--out", c.out, "Output file (default stdout)");
  verify->add_flag("--pretty", c.pretty, "Summary table on stderr");
  add_budget_flags(verify, c);

  auto* faultsim = app.add_subcommand("faultsim", "Random vertex faults and the components left");
  faultsim->add_option("--kind", c.kind, "fq or q")->required();
  faultsim->add_option("--n", c.n, "Dimension")->required();
  faultsim->add_option("--faults", c.faults, "Faulty vertices per trial");
  faultsim->add_option("--trials", c.trials, "Number of trials")->check(CLI::PositiveNumber);
  faultsim->add_option("--seed", c.seed, "Seed");
  faultsim->add_option("--g-max", c.g_max, "Tabulate thresholds for g = 1..g-max instead")
      ->check(CLI::PositiveNumber);
  faultsim->add_option("--out", c.out, "Output file (default stdout)");
  faultsim->add_flag("--pretty", c.pretty, "Copy of the table on stderr");
  faultsim->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return run_gen(c);
    if (*theta) return run_theta(c);
    if (*ckappa) return run_ckappa(c);
    if (*verify) return run_verify(c);
    if (*faultsim) return run_faultsim(c);
  } catch (const UsageError& e) {
    std::cerr << "foldkappa: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "foldkappa: i/o error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
