#include <cmath>

#include <doctest.h>

#include "ft/verifier.hpp"

using namespace ft;

namespace {
const GasModel kModel{};
const GasState kUplus{2.0, 0.0, 1.0, 1.0};

TrackerConfig config(double delta = 0.01) {
  TrackerConfig c;
  c.delta = delta;
  c.pbar = 1.0;
  c.glimm.kappa = 20.0;
  c.glimm.kplus = 2.0;
  return c;
}

TrackerState run_profile(const InitialProfile& prof, double x_max,
                         double delta = 0.01) {
  TrackerState st = initialize(prof, kModel, config(delta));
  advance(st, x_max);
  return st;
}
}  // namespace

TEST_CASE("bump test function") {
  const BumpTest b{1.0, 2.0, 0.5, 0.25};
  CHECK(b(1.0, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
  CHECK(b(1.5, 2.0) == 0.0);
  CHECK(b(1.0, 2.25) == 0.0);
  CHECK(b(10.0, -3.0) == 0.0);
  CHECK(b(1.2, 2.1) > 0.0);
  CHECK(b(1.2, 2.1) < std::exp(-2.0));

  const auto tests = default_test_set(0.0, 10.0, 0.0, 5.0);
  CHECK(tests.size() == 50);
  for (const BumpTest& t : tests) {
    CHECK(t.xc > 0.0);
    CHECK(t.xc < 10.0);
    CHECK(t.yc > 0.0);
    CHECK(t.yc < 5.0);
    CHECK(t.rx > 0.0);
  }
}

TEST_CASE("unperturbed run verifies to machine precision") {
  InitialProfile prof;
  prof.states = {kUplus};
  const TrackerState st = run_profile(prof, 20.0);

  const auto tests = default_test_set(0.0, 20.0, -1.0, 6.0);
  const WeakFormReport rep = weak_form(st, 0.0, 20.0, tests);
  CHECK(rep.F < 1e-13);
  CHECK(rep.G < 1e-13);
  CHECK(rep.I < 1e-13);
  CHECK(rep.J < 1e-13);
  CHECK(rep.E < 1e-13);

  for (const FrontAudit& a : rh_audit(st)) CHECK(a.residual < 1e-11);

  const UniformBounds b = uniform_bounds(st, kUplus);
  CHECK(b.max_tv < 1e-11);
  CHECK(b.max_linf < 1e-11);
  CHECK(b.max_boundary_slope < 1e-12);

  const AsymptoticReport ar = asymptotic_check(st, 1.0);
  CHECK(!ar.events_pending);
  CHECK(ar.slope_error < 1e-12);
  CHECK(ar.boundary_p_error < 1e-12);
  CHECK(ar.far_wave_matches);
  CHECK(!ar.far_wave_shock_predicted);
}

TEST_CASE("exact shocks and contacts leave no weak-form residual") {
  // A single 4-shock satisfies Rankine-Hugoniot exactly, so the telescoped
  // weak form vanishes identically; same for a contact.
  InitialProfile prof;
  prof.breakpoints = {2.0};
  prof.states = {kUplus, phi_gnl(4, -0.03, kUplus, kModel)};
  const TrackerState shock = run_profile(prof, 10.0);
  const auto tests = default_test_set(0.0, 10.0, -1.0, 10.0);
  WeakFormReport rep = weak_form(shock, 0.0, 10.0, tests);
  CHECK(rep.F < 1e-10);
  CHECK(rep.G < 1e-10);
  CHECK(rep.I < 1e-10);
  CHECK(rep.J < 1e-10);
  for (const FrontAudit& a : rh_audit(shock))
    if (a.note == "shock") CHECK(a.residual < 1e-8);

  prof.states = {kUplus, phi_contact(0.05, 0.1, kUplus)};
  const TrackerState contact = run_profile(prof, 10.0);
  rep = weak_form(contact, 0.0, 10.0, tests);
  CHECK(rep.F < 1e-10);
  CHECK(rep.G < 1e-10);
  CHECK(rep.I < 1e-10);
  CHECK(rep.J < 1e-10);
  for (const FrontAudit& a : rh_audit(contact))
    if (a.note == "contact") CHECK(a.residual < 1e-10);
}

TEST_CASE("rarefaction fans leave an O(delta) residual that shrinks") {
  InitialProfile prof;
  prof.breakpoints = {2.0};
  prof.states = {kUplus, phi_gnl(4, 0.08, kUplus, kModel)};
  const auto tests = default_test_set(0.0, 10.0, -1.0, 10.0);

  const WeakFormReport coarse =
      weak_form(run_profile(prof, 10.0, 0.04), 0.0, 10.0, tests);
  const WeakFormReport fine =
      weak_form(run_profile(prof, 10.0, 0.01), 0.0, 10.0, tests);
  const double rc = std::max(std::max(coarse.F, coarse.G),
                             std::max(coarse.I, coarse.J));
  const double rf =
      std::max(std::max(fine.F, fine.G), std::max(fine.I, fine.J));
  CHECK(rc > 0.0);
  CHECK(rf < rc);
  CHECK(rf < 0.5 * rc);  // roughly linear in delta
  CHECK(fine.E < 1e-8);
}

TEST_CASE("reflection run keeps boundary conditions and asymptotics") {
  InitialProfile prof;
  prof.breakpoints = {1.0};
  prof.states = {kUplus, phi_gnl(1, -0.02, kUplus, kModel)};
  const TrackerState st = run_profile(prof, 20.0);
  REQUIRE(!st.events.empty());

  for (const FrontAudit& a : rh_audit(st))
    if (a.note == "boundary") CHECK(a.residual < 1e-10);

  const AsymptoticReport ar = asymptotic_check(st, 1.0);
  CHECK(!ar.events_pending);
  CHECK(ar.slope_error < 1e-9);
  CHECK(ar.boundary_p_error < 1e-12);
  // Incident 1-shock carries p above ambient; the far field relaxes through
  // a 4-wave matching the solver's prediction.
  CHECK(ar.far_wave_matches);

  const UniformBounds b = uniform_bounds(st, kUplus);
  CHECK(b.max_tv < 0.2);
  CHECK(b.max_linf < 0.1);
  CHECK(b.max_boundary_slope < 0.05);
}

TEST_CASE("l1 distance in boundary-straightened coordinates") {
  InitialProfile flat;
  flat.states = {kUplus};
  const TrackerState a = run_profile(flat, 10.0);
  CHECK(l1_distance(a, a, 5.0, 4.0) == 0.0);

  InitialProfile jump;
  jump.breakpoints = {1.0};
  jump.states = {kUplus, phi_contact(0.0, 0.2, kUplus)};
  const TrackerState b = run_profile(jump, 10.0);
  // States agree below y = 1 and differ by the density jump above it.
  const double expected = (4.0 - 1.0) * (std::exp(0.2) - 1.0);
  CHECK(l1_distance(a, b, 5.0, 4.0) == doctest::Approx(expected).epsilon(1e-6));
  CHECK(l1_distance(b, a, 5.0, 4.0) ==
        doctest::Approx(l1_distance(a, b, 5.0, 4.0)).epsilon(1e-12));
}

TEST_CASE("tv of a slice sums adjacent jumps") {
  Slice s;
  s.states = {kUplus, phi_contact(0.0, 0.2, kUplus), kUplus};
  s.breakpoints = {1.0, 2.0};
  const double j = std::exp(0.2) - 1.0;
  CHECK(tv_of_slice(s) == doctest::Approx(2.0 * j).epsilon(1e-12));
}
