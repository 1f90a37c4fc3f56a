#include "atmofv/error.hpp"
#include "atmofv/thermo.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace atmofv;
using testing_support::close_rel;

TEST_CASE("dry air constants are internally consistent") {
  const GasConstants k = dry_air();
  CHECK(k.c_v == 715.5);
  CHECK(k.R == 287.0);
  CHECK(k.c_p == 1002.5);
  CHECK(k.R == k.c_p - k.c_v);
  CHECK(k.gamma == k.c_p / k.c_v);
  CHECK(k.g == 9.81);
  CHECK(k.p_g == 1.0e5);
  CHECK_THROWS_AS(make_gas_constants(-1.0, 287.0, 9.81, 1e5), ConfigError);
  CHECK_THROWS_AS(make_gas_constants(715.5, 0.0, 9.81, 1e5), ConfigError);
}

TEST_CASE("ground state at 300 K") {
  const GasConstants k = dry_air();
  const double rho = 1.0e5 / (287.0 * 300.0);
  const ConservedState q{rho, 0.0, 0.0, rho * 715.5 * 300.0};
  const PrimitiveState s = primitive_from_conserved(q, 0.0, k);
  CHECK(close_rel(s.T, 300.0, 1e-13));
  CHECK(close_rel(s.p, 1.0e5, 1e-13));
  CHECK(close_rel(s.theta, 300.0, 1e-13));
  CHECK(s.rho == doctest::Approx(1.16144).epsilon(1e-5));
}

TEST_CASE("conserved_from_primitive energy bookkeeping") {
  const GasConstants k = dry_air();
  PrimitiveState s{1.16144, 0.0, 0.0, 0.0, 300.0, 300.0};
  s.p = s.rho * k.R * s.T;
  const ConservedState q0 = conserved_from_primitive(s, 0.0, k);
  CHECK(close_rel(q0.rho_e, 1.16144 * 715.5 * 300.0, 1e-14));
  CHECK(q0.rho_u == 0.0);
  s.theta = potential_temperature(s.p, s.T, k);
  const ConservedState q1 = conserved_from_primitive(s, 1000.0, k);
  CHECK(close_rel(q1.rho_e - q0.rho_e, s.rho * k.g * 1000.0, 1e-12));
}

TEST_CASE("invalid states are rejected") {
  const GasConstants k = dry_air();
  CHECK_THROWS_AS(primitive_from_conserved({0.0, 0.0, 0.0, 1.0}, 0.0, k), InvalidStateError);
  CHECK_THROWS_AS(primitive_from_conserved({1.0, 0.0, 0.0, -1.0}, 0.0, k), InvalidStateError);
  // Kinetic plus potential energy exceeding the total leaves U <= 0.
  CHECK_THROWS_AS(primitive_from_conserved({1.0, 100.0, 0.0, 1000.0}, 0.0, k), InvalidStateError);
  PrimitiveState bad{1.0, 0.0, 0.0, 1.0e5, 300.0, 300.0};  // p != rho R T
  CHECK_THROWS_AS(conserved_from_primitive(bad, 0.0, k), InvalidStateError);
}

TEST_CASE("primitive/conserved round trip on random states") {
  const GasConstants k = dry_air();
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> zdist(0.0, 5000.0);
  for (int n = 0; n < 1000; ++n) {
    const PrimitiveState s = testing_support::random_state(rng, k);
    const double z = zdist(rng);
    const PrimitiveState r = primitive_from_conserved(conserved_from_primitive(s, z, k), z, k);
    CHECK(close_rel(r.rho, s.rho, 1e-12));
    CHECK(std::abs(r.u - s.u) <= 1e-12 * std::max(1.0, std::abs(s.u)));
    CHECK(std::abs(r.w - s.w) <= 1e-12 * std::max(1.0, std::abs(s.w)));
    CHECK(close_rel(r.p, s.p, 1e-12));
    CHECK(close_rel(r.T, s.T, 1e-12));
    CHECK(close_rel(r.theta, s.theta, 1e-12));
  }
}

TEST_CASE("sound speed") {
  const GasConstants k14 = make_gas_constants(2.5, 1.0, 9.81, 1e5);
  CHECK(k14.gamma == doctest::Approx(1.4).epsilon(1e-15));
  CHECK(sound_speed(1e5, 1.25, k14) == doctest::Approx(334.664).epsilon(1e-6));
  CHECK(close_rel(sound_speed(4e5, 1.25, k14), 2.0 * sound_speed(1e5, 1.25, k14), 1e-15));
  CHECK(close_rel(sound_speed(1.0 / k14.gamma, 1.0, k14), 1.0, 1e-15));
  CHECK_THROWS_AS(sound_speed(-1.0, 1.0, k14), DomainError);
  CHECK_THROWS_AS(sound_speed(1.0, 0.0, k14), DomainError);
}

TEST_CASE("potential temperature") {
  const GasConstants k = dry_air();
  CHECK(potential_temperature(k.p_g, 300.0, k) == 300.0);
  CHECK(close_rel(potential_temperature(0.5 * k.p_g, 300.0, k), 300.0 * std::pow(2.0, k.R / k.c_p),
                  1e-14));
  for (double T : {150.0, 250.0, 333.3}) CHECK(potential_temperature(k.p_g, T, k) == T);
  const double p = 7.3e4;
  const double theta = potential_temperature(p, 280.0, k);
  CHECK(close_rel(theta * exner(p, k), 280.0, 1e-12));
}
