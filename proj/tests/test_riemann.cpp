#include "atmofv/error.hpp"
#include "atmofv/exact_riemann.hpp"
#include "atmofv/riemann.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace atmofv;

namespace {

/// Component scales for relative comparisons of flux vectors.
struct Scale {
  double mass, momentum, energy;
};

Scale flux_scale(const PrimitiveState& s, const GasConstants& k) {
  const double speed = std::hypot(s.u, s.w) + sound_speed(s.p, s.rho, k);
  const double E = s.rho * (k.c_v * s.T + 0.5 * (s.u * s.u + s.w * s.w)) + s.p;
  return {s.rho * speed, s.p + s.rho * speed * speed, E * speed};
}

bool flux_close(const InterfaceFlux& a, const InterfaceFlux& b, const Scale& sc, double tol) {
  return std::abs(a.mass - b.mass) <= tol * sc.mass &&
         std::abs(a.momentum.x - b.momentum.x) <= tol * sc.momentum &&
         std::abs(a.momentum.z - b.momentum.z) <= tol * sc.momentum &&
         std::abs(a.energy - b.energy) <= tol * sc.energy;
}

InterfaceFlux negate(const InterfaceFlux& f) { return {-f.mass, -f.momentum, -f.energy}; }

PrimitiveState make(double rho, double u, double w, double p, const GasConstants& k) {
  PrimitiveState s{rho, u, w, p, p / (rho * k.R), 0.0};
  s.theta = potential_temperature(s.p, s.T, k);
  return s;
}

}  // namespace

TEST_CASE("scheme tokens") {
  CHECK(parse_flux_scheme("roe-pike") == FluxScheme::RoePike);
  CHECK(parse_flux_scheme("hllc") == FluxScheme::Hllc);
  CHECK(parse_flux_scheme("ausm-up") == FluxScheme::AusmUp);
  CHECK(parse_flux_scheme("hllc-ausm") == FluxScheme::HllcAusm);
  for (FluxScheme s : kAllSchemes) CHECK(parse_flux_scheme(to_string(s)) == s);
  CHECK_THROWS_AS(parse_flux_scheme("hll"), ConfigError);
}

TEST_CASE("solver parameter validation") {
  SolverChoice c;
  CHECK_NOTHROW(validate(c));
  c.ausm.M_inf = 0.0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.ausm.M_inf = 1.5;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.ausm.M_inf = 1.0;
  c.ausm.K_p = -0.1;
  CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("physical flux") {
  const GasConstants k = dry_air();
  const PrimitiveState rest = make(1.2, 0.0, 0.0, 9.5e4, k);
  const InterfaceFlux f0 = physical_flux(rest, {1.0, 0.0}, 100.0, k);
  CHECK(f0.mass == 0.0);
  CHECK(f0.momentum.x == 9.5e4);
  CHECK(f0.momentum.z == 0.0);
  CHECK(f0.energy == 0.0);

  const PrimitiveState s = make(1.16144, 10.0, 0.0, 1.0e5, k);
  const InterfaceFlux f = physical_flux(s, {1.0, 0.0}, 0.0, k);
  CHECK(f.mass == doctest::Approx(11.6144).epsilon(1e-14));
  CHECK(f.momentum.x == doctest::Approx(1.16144 * 100.0 + 1.0e5).epsilon(1e-14));
  CHECK(f.momentum.z == 0.0);
  const double e = k.c_v * s.T + 50.0;
  CHECK(f.energy == doctest::Approx((1.16144 * e + 1.0e5) * 10.0).epsilon(1e-13));

  const InterfaceFlux g = physical_flux(s, {-1.0, 0.0}, 0.0, k);
  CHECK(g.mass == -f.mass);
  CHECK(g.momentum.x == -f.momentum.x);
  CHECK(g.energy == -f.energy);

  const InterfaceFlux h = physical_flux(s, {1.0, 0.0}, 1000.0, k);
  CHECK(h.energy - f.energy == doctest::Approx(f.mass * k.g * 1000.0).epsilon(1e-10));
}

TEST_CASE("consistency on random states, every solver") {
  const GasConstants k = dry_air();
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> zd(0.0, 6000.0);
  for (FluxScheme scheme : kAllSchemes) {
    const SolverChoice choice{scheme, {}};
    int bad = 0;
    for (int n = 0; n < 10000; ++n) {
      const PrimitiveState s = testing_support::random_state(rng, k);
      const Vec2 normal = (n % 2 == 0) ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
      const double z = zd(rng);
      const InterfaceFlux f = compute_flux(choice, {s, s, normal, z}, k);
      if (!flux_close(f, physical_flux(s, normal, z, k), flux_scale(s, k), 1e-12)) ++bad;
    }
    INFO("scheme " << to_string(scheme));
    CHECK(bad == 0);
  }
}

TEST_CASE("antisymmetry on random states, every solver") {
  const GasConstants k = dry_air();
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> zd(0.0, 6000.0);
  for (FluxScheme scheme : kAllSchemes) {
    const SolverChoice choice{scheme, {}};
    int bad = 0;
    for (int n = 0; n < 10000; ++n) {
      const PrimitiveState l = testing_support::random_state(rng, k);
      const PrimitiveState r = testing_support::random_state(rng, k);
      const Vec2 normal = (n % 2 == 0) ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
      const double z = zd(rng);
      const InterfaceFlux a = compute_flux(choice, {l, r, normal, z}, k);
      const InterfaceFlux b = negate(compute_flux(choice, {r, l, -normal, z}, k));
      Scale sc = flux_scale(l, k);
      const Scale sr = flux_scale(r, k);
      sc = {std::max(sc.mass, sr.mass), std::max(sc.momentum, sr.momentum), std::max(sc.energy, sr.energy)};
      if (!flux_close(a, b, sc, 1e-12)) ++bad;
    }
    INFO("scheme " << to_string(scheme));
    CHECK(bad == 0);
  }
}

TEST_CASE("rotation covariance") {
  const GasConstants k = dry_air();
  std::mt19937_64 rng(5);
  for (FluxScheme scheme : kAllSchemes) {
    const SolverChoice choice{scheme, {}};
    for (int n = 0; n < 200; ++n) {
      const PrimitiveState l = testing_support::random_state(rng, k);
      const PrimitiveState r = testing_support::random_state(rng, k);
      // Quarter turn (x, z) -> (-z, x) of velocities and normal.
      auto rot = [&](PrimitiveState s) {
        const double u = s.u;
        s.u = -s.w;
        s.w = u;
        return s;
      };
      const InterfaceFlux a = compute_flux(choice, {l, r, {1.0, 0.0}, 500.0}, k);
      const InterfaceFlux b = compute_flux(choice, {rot(l), rot(r), {0.0, 1.0}, 500.0}, k);
      const Scale sc = flux_scale(l, k);
      CHECK(std::abs(a.mass - b.mass) <= 1e-12 * sc.mass);
      CHECK(std::abs(-a.momentum.z - b.momentum.x) <= 1e-12 * sc.momentum);
      CHECK(std::abs(a.momentum.x - b.momentum.z) <= 1e-12 * sc.momentum);
      CHECK(std::abs(a.energy - b.energy) <= 1e-12 * sc.energy);
    }
  }
}

TEST_CASE("rest state gives pure pressure flux") {
  const GasConstants k = dry_air();
  const PrimitiveState s = make(1.1, 0.0, 0.0, 9.0e4, k);
  for (FluxScheme scheme : kAllSchemes) {
    const InterfaceFlux f = compute_flux({scheme, {}}, {s, s, {0.0, 1.0}, 250.0}, k);
    CHECK(std::abs(f.mass) <= 1e-15);
    CHECK(f.momentum.x == 0.0);
    CHECK(f.momentum.z == doctest::Approx(9.0e4).epsilon(1e-14));
    CHECK(std::abs(f.energy) <= 1e-9);
  }
}

TEST_CASE("supersonic uniform state is fully upwinded") {
  const GasConstants k = dry_air();
  const PrimitiveState s = make(1.0, 600.0, 20.0, 8.0e4, k);
  const InterfaceFlux ref = physical_flux(s, {1.0, 0.0}, 0.0, k);
  for (FluxScheme scheme : kAllSchemes) {
    const InterfaceFlux f = compute_flux({scheme, {}}, {s, s, {1.0, 0.0}, 0.0}, k);
    CHECK(flux_close(f, ref, flux_scale(s, k), 1e-13));
  }
  // Supersonic from the left with a different right state: HLLC and AUSM+-up
  // take the left physical flux.
  const PrimitiveState r = make(0.5, 650.0, -5.0, 5.0e4, k);
  CHECK(flux_close(hllc_flux({s, r, {1.0, 0.0}, 0.0}, k), ref, flux_scale(s, k), 1e-13));
  CHECK(flux_close(ausm_up_flux({s, r, {1.0, 0.0}, 0.0}, {}, k), ref, flux_scale(s, k), 1e-13));
}

TEST_CASE("HLLC-AUSM mass flux without a density jump") {
  const GasConstants k = dry_air();
  // Same pressure and velocity: contact only, S* = u, rho*_L = rho_L.
  const PrimitiveState l = make(1.2, 5.0, 0.0, 1.0e5, k);
  const PrimitiveState r = make(1.0, 5.0, 0.0, 1.0e5, k);
  const InterfaceFlux f = hllc_ausm_flux({l, r, {1.0, 0.0}, 0.0}, k);
  CHECK(f.mass == doctest::Approx(1.2 * 5.0).epsilon(1e-12));
}

TEST_CASE("Sod interface flux against the Godunov flux") {
  const GasConstants k = make_gas_constants(2.5, 1.0, 0.0, 1.0e5);
  const PrimitiveState l = make(1.0, 0.0, 0.0, 1.0, k);
  const PrimitiveState r = make(0.125, 0.0, 0.0, 0.1, k);
  const ExactRiemannSolution exact({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, k.gamma);
  const GasState1D g = exact.sample(0.0);
  const InterfaceFlux god = physical_flux(make(g.rho, g.u, 0.0, g.p, k), {1.0, 0.0}, 0.0, k);
  for (FluxScheme scheme : kAllSchemes) {
    const InterfaceFlux f = compute_flux({scheme, {.M_inf = 1.0}}, {l, r, {1.0, 0.0}, 0.0}, k);
    INFO("scheme " << to_string(scheme));
    CHECK(f.mass == doctest::Approx(god.mass).epsilon(0.25));
    CHECK(f.momentum.x == doctest::Approx(god.momentum.x).epsilon(0.25));
    CHECK(f.energy == doctest::Approx(god.energy).epsilon(0.25));
  }
}
