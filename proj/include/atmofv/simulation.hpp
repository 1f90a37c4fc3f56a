#pragma once

#include "atmofv/cases.hpp"
#include "atmofv/diagnostics.hpp"
#include "atmofv/mesh.hpp"
#include "atmofv/operator.hpp"
#include "atmofv/thermo.hpp"
#include "atmofv/timestepper.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace atmofv {

struct RunState {
  double t = 0.0;
  std::int64_t n = 0;
  Field<ConservedState> states;
};

struct RunOptions {
  /// Diagnostic record every this many steps; t = 0 and t_end always recorded.
  std::int64_t diag_every = 1;
  /// Progress line on stderr at every record.
  bool progress = false;
  std::function<void(const RunState&, const DiagnosticRecord&)> on_record;
  /// Called after every completed step (and once for the initial state).
  std::function<void(const RunState&)> on_step;
};

struct RunResult {
  RunState final_state;
  std::vector<DiagnosticRecord> records;
};

/// Advances a prepared state with RK4 on a fixed step. The time after step
/// n is n * dt.
class Simulation {
 public:
  Simulation(const CaseConfig& cfg, const GasConstants& k);
  Simulation(const CaseConfig& cfg, const GasConstants& k, Field<ConservedState> initial);

  const Mesh& mesh() const { return mesh_; }
  const CaseConfig& config() const { return cfg_; }
  const RunState& state() const { return run_; }
  std::int64_t total_steps() const { return n_steps_; }

  /// One step. Throws StepError carrying the step and stage on failure;
  /// the state is left at the previous step.
  void step();

  DiagnosticRecord record() const;

 private:
  CaseConfig cfg_;
  GasConstants k_;
  Mesh mesh_;
  std::int64_t n_steps_;
  SpatialOperator op_;
  RunState run_;
  Rk4Workspace<Field<ConservedState>> ws_;
};

/// Runs cfg from t = 0 to t_end. Throws ConfigError up front on an invalid
/// case, StepError on a failed step after delivering every earlier record.
RunResult run(const CaseConfig& cfg, const GasConstants& k, const RunOptions& options = {});

}  // namespace atmofv
