#pragma once

#include "atmofv/mesh.hpp"

#include <cstddef>
#include <vector>

namespace atmofv {

namespace detail {
template <class T>
std::vector<T>& flat(std::vector<T>& v) { return v; }
template <class T>
std::vector<T>& flat(Field<T>& f) { return f.values(); }
}  // namespace detail

/// Stage buffers for rk4_step, reused across steps. State is a std::vector
/// or a Field.
template <class State>
struct Rk4Workspace {
  State stage;
  State k1, k2, k3, k4;
};

/// Classical explicit RK4:
///   K1 = L(q), K2 = L(q + dt/2 K1), K3 = L(q + dt/2 K2), K4 = L(q + dt K3),
///   q += dt/6 (K1 + 2 K2 + 2 K3 + K4).
/// `rhs(state, stage_index, out)` fills out with L(state); stage_index is 0..3.
/// Exceptions thrown by rhs propagate with q untouched.
template <class State, class Rhs>
void rk4_step(State& q, double dt, Rhs&& rhs, Rk4Workspace<State>& ws) {
  ws.stage = q;
  for (State* k : {&ws.k1, &ws.k2, &ws.k3, &ws.k4}) {
    if (detail::flat(*k).size() != detail::flat(q).size()) *k = q;
  }
  auto& qv = detail::flat(q);
  auto& sv = detail::flat(ws.stage);
  auto& k1 = detail::flat(ws.k1);
  auto& k2 = detail::flat(ws.k2);
  auto& k3 = detail::flat(ws.k3);
  auto& k4 = detail::flat(ws.k4);
  const std::size_t n = qv.size();
  const double half = 0.5 * dt;

  rhs(q, 0, ws.k1);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) sv[i] = qv[i] + half * k1[i];
  rhs(ws.stage, 1, ws.k2);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) sv[i] = qv[i] + half * k2[i];
  rhs(ws.stage, 2, ws.k3);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) sv[i] = qv[i] + dt * k3[i];
  rhs(ws.stage, 3, ws.k4);

  const double sixth = dt / 6.0;
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    qv[i] = qv[i] + sixth * (((k1[i] + 2.0 * k2[i]) + 2.0 * k3[i]) + k4[i]);
  }
}

}  // namespace atmofv
