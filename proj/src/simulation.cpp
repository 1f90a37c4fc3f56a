#include "atmofv/simulation.hpp"

#include "atmofv/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace atmofv {

namespace {

OperatorConfig operator_config(const CaseConfig& cfg) { return {cfg.solver, cfg.diffusion}; }

double max_abs_w(const DiagnosticRecord& r) { return std::max(std::abs(r.w_max), std::abs(r.w_min)); }

}  // namespace

Simulation::Simulation(const CaseConfig& cfg, const GasConstants& k)
    : Simulation(cfg, k, Field<ConservedState>{}) {}

Simulation::Simulation(const CaseConfig& cfg, const GasConstants& k, Field<ConservedState> initial)
    : cfg_(cfg),
      k_(k),
      mesh_(grid_spec(cfg)),
      n_steps_((validate(cfg), step_count(cfg))),
      op_(mesh_, k, operator_config(cfg)) {
  if (initial.values().empty()) {
    run_.states = initial_state(cfg_, mesh_, k_);
  } else {
    if (initial.nx() != mesh_.nx() || initial.nz() != mesh_.nz() ||
        initial.n_ghost() != mesh_.n_ghost()) {
      throw ConfigError("initial state does not match the case grid");
    }
    run_.states = std::move(initial);
  }
}

void Simulation::step() {
  const std::int64_t next = run_.n + 1;
  const bool every_stage = cfg_.refresh_per_stage;
  auto rhs = [&](const Field<ConservedState>& q, int stage, Field<ConservedState>& out) {
    try {
      op_.evaluate(q, out, every_stage || stage == 0);
    } catch (const Error& e) {
      std::ostringstream os;
      os << "step " << next << ", stage " << stage + 1 << ": " << e.what();
      throw StepError(os.str(), next, stage + 1);
    }
  };
  Field<ConservedState> backup = run_.states;
  try {
    rk4_step(run_.states, cfg_.dt, rhs, ws_);
  } catch (...) {
    run_.states = std::move(backup);
    throw;
  }
  run_.n = next;
  run_.t = static_cast<double>(next) * cfg_.dt;
}

DiagnosticRecord Simulation::record() const {
  return make_record(run_.states, mesh_, run_.t, cfg_.dt, cfg_.theta0, k_);
}

RunResult run(const CaseConfig& cfg, const GasConstants& k, const RunOptions& options) {
  if (options.diag_every < 1) throw ConfigError("diagnostic interval must be >= 1");
  Simulation sim(cfg, k);
  RunResult result;
  auto emit = [&] {
    const DiagnosticRecord r = sim.record();
    result.records.push_back(r);
    if (options.progress) {
      std::fprintf(stderr, "step %lld  t=%.6g  cfl=%.4g  max|w|=%.6e  mass=%.17g\n",
                   static_cast<long long>(sim.state().n), r.t, r.cfl, max_abs_w(r), r.total_mass);
    }
    if (options.on_record) options.on_record(sim.state(), r);
  };
  if (options.on_step) options.on_step(sim.state());
  emit();
  const std::int64_t n = sim.total_steps();
  for (std::int64_t s = 1; s <= n; ++s) {
    sim.step();
    if (options.on_step) options.on_step(sim.state());
    if (s % options.diag_every == 0 || s == n) emit();
  }
  result.final_state = sim.state();
  return result;
}

}  // namespace atmofv
