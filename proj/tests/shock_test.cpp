#include <gtest/gtest.h>

#include <random>

#include "roguewave/errors.hpp"
#include "roguewave/numerics.hpp"
#include "roguewave/profiles.hpp"
#include "roguewave/shock.hpp"
#include "support.hpp"

namespace rw = roguewave;
using rw::Side;
using rwtest::ex1;
using rwtest::ex2;

namespace {

// Lax conditions for a shock of the second family moving into still water.
bool lax_admissible(const rw::ShockState& s, double g) {
  const double ul = s.m_l / s.q_l, ur = s.m_r / s.q_r;
  const double cl = std::sqrt(g * s.q_l), cr = std::sqrt(g * s.q_r);
  return ur + cr < s.speed && s.speed < ul + cl && s.speed > ul - cl;
}

double relative_to_line(const rw::WaveLine& line, double q, double m) {
  return std::abs(line.flux(q) - m) / std::max(1.0, std::abs(m));
}

}  // namespace

TEST(RankineHugoniot, VanishesAtJunction) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const double q_star = rwtest::open_uniform(rng, 500.0, 5000.0);
    const double q_0 = q_star * (1.0 + rwtest::open_uniform(rng, 1e-5, 5e-4));
    const double q_max = rw::solve_max_qref(q_star, q_0, {});
    // upper part of (q_0, q_max], where q_P < q_ref holds
    const double q_ref = q_0 + (q_max - q_0) * rwtest::open_uniform(rng, 0.7, 1.0);
    const auto c = rw::build_configuration(q_star, q_0, q_ref, {});
    EXPECT_LE(std::abs(rw::rh_residual(c.q_p, c.q_p, c)), 1e-10);
  }
}

TEST(RankineHugoniot, MaximalReferenceRoot) {
  EXPECT_LE(std::abs(rw::rh_residual(ex1().q_ref, ex1().q_star, ex1())), 1e-8);
  EXPECT_LE(std::abs(rw::rh_residual(ex2().q_ref, ex2().q_star, ex2())), 1e-8);
}

TEST(RankineHugoniot, RightStateMustDropBelowJunction) {
  const auto& c = ex1();
  EXPECT_GT(std::abs(rw::rh_residual(c.q_ref, c.q_p, c)), 1e-4);
  const double q_l = 0.5 * (c.q_p + rw::rh_locus_end(c));
  const double at_p = rw::rh_residual(q_l, c.q_p, c);
  const double at_star = rw::rh_residual(q_l, c.q_star, c);
  EXPECT_LT(at_p * at_star, 0.0);
}

TEST(RankineHugoniot, SolveRightDepth) {
  for (const auto* cp : {&ex1(), &ex2()}) {
    const auto& c = *cp;
    EXPECT_EQ(rw::rh_solve_qr(c.q_p, c), c.q_p);
    const double q_l = 0.5 * (c.q_p + rw::rh_locus_end(c));
    const double q_r = rw::rh_solve_qr(q_l, c);
    EXPECT_GT(q_r, c.q_star);
    EXPECT_LT(q_r, c.q_p);
    EXPECT_LE(std::abs(rw::rh_residual(q_l, q_r, c)), 1e-10);
    EXPECT_NEAR(rw::rh_solve_qr(rw::rh_locus_end(c), c), c.q_star, 1e-6);
  }
}

// The locus from P reaches M_star before M_ref; the end depths are 50-digit
// reference values.
TEST(RankineHugoniot, LocusEnd) {
  EXPECT_NEAR(rw::rh_locus_end(ex1()), 3731.5724, 1e-3);
  EXPECT_NEAR(rw::rh_locus_end(ex2()), 3763.4676, 1e-3);
  EXPECT_LE(rw::rh_locus_end(ex1()), ex1().q_ref);
  EXPECT_THROW(rw::rh_solve_qr(0.5 * (ex1().q_ref + rw::rh_locus_end(ex1())), ex1()),
               rw::LocusError);
}

TEST(RankineHugoniot, LocusSamples) {
  for (const auto* cp : {&ex1(), &ex2()}) {
    const auto& c = *cp;
    const auto ends = rw::rh_locus(2, c);
    ASSERT_EQ(ends.size(), 2u);
    EXPECT_EQ(ends[0].q_l, c.q_p);
    EXPECT_EQ(ends[0].q_r, c.q_p);
    EXPECT_EQ(ends[1].q_l, rw::rh_locus_end(c));
    EXPECT_NEAR(ends[1].q_r, c.q_star, 1e-6);

    const auto pts = rw::rh_locus(101, c);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      EXPECT_LE(relative_to_line(c.west_line, pts[i].q_l, pts[i].m_l), 1e-10);
      EXPECT_LE(relative_to_line(c.east_line, pts[i].q_r, pts[i].m_r), 1e-10);
      EXPECT_LE(std::abs(rw::rh_residual(pts[i].q_l, pts[i].q_r, c)), 1e-10);
      if (i > 0) EXPECT_LT(pts[i].q_r, pts[i - 1].q_r);
    }
  }
}

TEST(ShockSpeed, Formula) {
  EXPECT_THROW(rw::shock_speed(3710.0, 3710.0, 1.0, 2.0), rw::DomainError);
  const auto& c = ex1();
  EXPECT_DOUBLE_EQ(rw::shock_speed(c.q_ref, c.q_star, c.m_ref, 0.0),
                   c.m_ref / (c.q_ref - c.q_star));
}

TEST(ShockSpeed, JunctionLimit) {
  for (const auto* cp : {&ex1(), &ex2()}) {
    const auto& c = *cp;
    const double s0 = rw::junction_shock_speed(c);
    EXPECT_GT(s0, c.c_star);
    EXPECT_LT(s0, c.a_ref);
    // numeric limit along the locus
    const double q_l = c.q_p + 1e-4;
    const double q_r = rw::rh_solve_qr(q_l, c);
    const double s = rw::shock_speed(q_l, q_r, c.west_line.flux(q_l), c.east_line.flux(q_r));
    EXPECT_NEAR(s, s0, 1e-4);
  }
  EXPECT_NEAR(rw::junction_shock_speed(ex1()), 191.7348, 1e-3);
  EXPECT_NEAR(rw::junction_shock_speed(ex2()), 192.9600, 1e-3);
}

TEST(ShockSpeed, LaxAlongLocus) {
  for (const auto* cp : {&ex1(), &ex2()}) {
    const auto& c = *cp;
    const auto pts = rw::rh_locus(64, c);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      rw::ShockState s;
      s.q_l = pts[i].q_l;
      s.q_r = pts[i].q_r;
      s.m_l = pts[i].m_l;
      s.m_r = pts[i].m_r;
      s.speed = rw::shock_speed(s.q_l, s.q_r, s.m_l, s.m_r);
      EXPECT_TRUE(lax_admissible(s, c.g)) << i;
    }
  }
}

TEST(Mass, InitialMassEdgeCases) {
  const auto& c = ex1();
  EXPECT_NEAR(rw::initial_mass(-1e-9, 1e-9, c), 0.0, 1e-4);
  const auto flat = rw::build_configuration(3700.0, 3700.0, 3700.0, {});
  EXPECT_DOUBLE_EQ(rw::initial_mass(-100.0, 300.0, flat), 3700.0 * 400.0);
}

TEST(Mass, TwoIntegrationRoutes) {
  for (const auto* cp : {&ex1(), &ex2()}) {
    const auto& c = *cp;
    const double x1 = -5e4, x2 = 5e4;
    const double q1 = rw::invert_profile(x1, rw::make_branch(Side::West, c), c);
    const double q2 = rw::invert_profile(x2, rw::make_branch(Side::East, c), c);
    const double by_x = rw::initial_mass(x1, x2, c);
    const double by_q = rw::mass_by_depth(q1, c.q_p, c.q_p, q2, c);
    EXPECT_LE(rwtest::rel_diff(by_x, by_q), 1e-8);
  }
}

TEST(Mass, AgreesWithCompositeSimpson) {
  const auto& c = ex1();
  const auto w = rw::make_branch(Side::West, c);
  const auto e = rw::make_branch(Side::East, c);
  auto simpson = [&](const rw::ProfileBranch& br, double a, double b) {
    const int n = 20000;
    const double h = (b - a) / n;
    double s = rw::profile_depth(a, 0, br, c) + rw::profile_depth(b, 0, br, c);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * rw::profile_depth(a + i * h, 0, br, c);
    return s * h / 3.0;
  };
  const double expected = simpson(w, -5e4, 0.0) + simpson(e, 0.0, 5e4);
  EXPECT_LE(rwtest::rel_diff(rw::initial_mass(-5e4, 5e4, c), expected), 1e-10);
}

TEST(Mass, BetweenAtOriginIsInitial) {
  const auto& c = ex1();
  EXPECT_LE(rwtest::rel_diff(rw::mass_between(-5e4, 5e4, 0.0, 0.0, c),
                             rw::initial_mass(-5e4, 5e4, c)), 1e-12);
}

TEST(Mass, BetweenWithShockAtLeftEdgeIsEastOnly) {
  const auto& c = ex1();
  const double t = 1000.0;
  const double x1 = c.c_star * t + 1000.0, x2 = x1 + 3e4;
  const auto e = rw::make_branch(Side::East, c);
  const auto east = rw::integrate(
      [&](double x) { return rw::profile_depth(x, t, e, c); }, x1, x2, 0.0, 1e-12);
  EXPECT_LE(rwtest::rel_diff(rw::mass_between(x1, x2, x1, t, c), east.value), 1e-10);
}

TEST(Mass, FunctionalIncreasing) {
  const auto& c = ex1();
  const double t = 500.0;
  std::mt19937_64 rng(29);
  const double lo = c.a_ref * t, hi = lo + rw::psi_west(c.q_ref, c);
  for (int i = 0; i < 30; ++i) {
    const double x0 = rwtest::open_uniform(rng, lo, hi - 10.0);
    EXPECT_GT(rw::mass_between(-5e4, 3e5, x0 + 5.0, t, c),
              rw::mass_between(-5e4, 3e5, x0, t, c));
  }
}

TEST(Trajectories, StillWaterTails) {
  const auto& c = ex1();
  // West tail decays like 1/x, East tail exponentially
  double prev = 1.0;
  for (double x : {-3e5, -3e6, -3e7, -3e8}) {
    const double v = rw::advance_trajectories({x, 3e6, 0.0}, 1.0, c).x1 - x;
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, 0.15 * prev);
    prev = v;
  }
  EXPECT_LT(prev, 2e-4);
  const auto next = rw::advance_trajectories({-5e4, 3e6, 0.0}, 1.0, c);
  EXPECT_NEAR(next.x2, 3e6, 1e-9);
  EXPECT_EQ(next.t, 1.0);
}

TEST(Trajectories, HeunStepHalving) {
  const auto& c = ex1();
  const rw::TrajectoryPair start{-5e4, 5e4, 0.0};
  // local error of the trapezoid step is third order in dt
  auto defect = [&](double dt) {
    const auto one = rw::advance_trajectories(start, dt, c);
    const auto two = rw::advance_trajectories(rw::advance_trajectories(start, dt / 2, c), dt / 2, c);
    return std::abs(one.x1 - two.x1);
  };
  const double d_big = defect(2.0), d_small = defect(1.0);
  ASSERT_GT(d_small, 0.0);
  EXPECT_NEAR(d_big / d_small, 8.0, 0.25);
  EXPECT_LT(d_small, 1e-6);
}

TEST(Trajectories, OutsideProfileDomain) {
  const auto& c = ex1();
  EXPECT_THROW(rw::advance_trajectories({1e4, 5e4, 0.0}, 1.0, c), rw::TrajectoryError);
}

TEST(LocateShock, InitialJunction) {
  const auto& c = ex1();
  const double m0 = rw::initial_mass(-5e4, 5e4, c);
  const auto s = rw::locate_shock(0.0, {-5e4, 5e4, 0.0}, m0, c);
  EXPECT_EQ(s.x0, 0.0);
  EXPECT_EQ(s.q_l, c.q_p);
  EXPECT_EQ(s.q_r, c.q_p);
  EXPECT_EQ(s.amplitude, 0.0);
}

// The stitched field gains mass at every x0 of the admissible bracket once the
// branches separate, so F(x0) = M0 has no root. The locator must say so.
TEST(LocateShock, MassFunctionalHasNoRootOnceBranchesSeparate) {
  const auto& c = ex1();
  const double x2 = rw::default_right_bound(c, 1000.0);
  rw::TrajectoryPair pair{-5e4, x2, 0.0};
  const double m0 = rw::initial_mass(pair.x1, pair.x2, c);
  for (int i = 0; i < 100; ++i) pair = rw::advance_trajectories(pair, 1.0, c);
  EXPECT_THROW(rw::locate_shock(pair.t, pair, m0, c), rw::BracketError);
}

TEST(ShockSystem, InitialJunction) {
  const auto s = rw::solve_shock_system(0.0, ex1());
  EXPECT_EQ(s.x0, 0.0);
  EXPECT_EQ(s.q_l, ex1().q_p);
  EXPECT_EQ(s.amplitude, 0.0);
}

TEST(ShockSystem, ThreeConditionsHold) {
  for (const auto* cp : {&ex1(), &ex2()}) {
    const auto& c = *cp;
    for (double t : {10.0, 100.0, 1000.0, 5000.0}) {
      const auto s = rw::solve_shock_system(t, c);
      EXPECT_LE(std::abs(rw::rh_residual(s.q_l, s.q_r, c)), 1e-8) << t;
      EXPECT_NEAR(rw::psi_west(s.q_l, c), s.x0 - c.a_ref * t, 1e-6);
      EXPECT_NEAR(rw::psi_east(s.q_r, c), s.x0 - c.c_star * t, 1e-6);
      EXPECT_TRUE(lax_admissible(s, c.g));
      EXPECT_LE(relative_to_line(c.west_line, s.q_l, s.m_l), 1e-10);
      EXPECT_LE(relative_to_line(c.east_line, s.q_r, s.m_r), 1e-10);
      EXPECT_DOUBLE_EQ(s.amplitude, s.q_l - s.q_r);
    }
  }
}

// Regression values of the three-equation construction at t = 1000.
TEST(ShockSystem, AmplitudeRegression) {
  EXPECT_NEAR(rw::solve_shock_system(1000.0, ex1()).amplitude, 7.4710, 1e-3);
  EXPECT_NEAR(rw::solve_shock_system(1000.0, ex2()).amplitude, 21.5753, 1e-3);
}

TEST(ShockSystem, BadBrackets) {
  const auto& c = ex1();
  const double at = c.a_ref * 1000.0;
  EXPECT_THROW(rw::solve_shock_system(1000.0, c, std::pair{-10.0, -5.0}), rw::DomainError);
  EXPECT_THROW(rw::solve_shock_system(1000.0, c, std::pair{at, at + 10.0}), rw::NumericalError);
}

TEST(Collapse, RightStateReachesStillWaterFirst) {
  for (const auto* cp : {&ex1(), &ex2()}) {
    const auto& c = *cp;
    const auto info = rw::detect_collapse(c);
    ASSERT_TRUE(info.reached());
    EXPECT_EQ(info.time, info.right_event_time);
    EXPECT_LT(info.right_event_time, info.left_event_time);
    const auto s = rw::solve_shock_system(info.time, c);
    EXPECT_NEAR(s.q_r, c.q_star, 2e-3);
    // amplitude close to q_ref - q_star, short only by the locus end gap
    EXPECT_NEAR(s.amplitude, c.q_ref - c.q_star, 0.015 * (c.q_ref - c.q_star));
  }
}

TEST(Collapse, Times) {
  EXPECT_NEAR(rw::detect_collapse(ex1()).time, 94590.0, 10.0);
  EXPECT_NEAR(rw::detect_collapse(ex2()).time, 50515.0, 10.0);
}

TEST(Collapse, CrestAboveFiftyMetresForSecondScenario) {
  const auto& c = ex2();
  const auto s = rw::solve_shock_system(rw::detect_collapse(c).time, c);
  EXPECT_GT(s.q_l - c.q_star, 50.0);
}

TEST(Collapse, FlatNeverCollapses) {
  const auto flat = rw::build_configuration(3700.0, 3700.0, 3700.0, {});
  EXPECT_FALSE(rw::detect_collapse(flat).reached());
}

TEST(Simulate, FirstScenarioRecord) {
  const auto rec = rw::simulate(ex1(), {});
  ASSERT_EQ(rec.states.size(), 11u);
  EXPECT_FALSE(rec.collapsed);
  EXPECT_EQ(rec.states.front().amplitude, 0.0);
  double prev = -1.0;
  for (const auto& s : rec.states) {
    EXPECT_GE(s.amplitude, prev);
    prev = s.amplitude;
    EXPECT_LE(s.mass_rel_error, 1e-4) << s.t;
    EXPECT_LE(ex1().q_star, s.q_r);
    EXPECT_LE(s.q_r, ex1().q_p);
    EXPECT_LE(ex1().q_p, s.q_l);
    EXPECT_LE(s.q_l, ex1().q_ref);
  }
  EXPECT_EQ(rec.states.back().t, 1000.0);
}

TEST(Simulate, OutputTimes) {
  rw::SimulationOptions o;
  o.t_end = 50.0;
  o.output_times = {0.0, 12.5, 50.0};
  o.dt = 0.5;
  const auto rec = rw::simulate(ex1(), o);
  ASSERT_EQ(rec.states.size(), 3u);
  EXPECT_EQ(rec.states[1].t, 12.5);
  EXPECT_EQ(rw::default_output_times(250.0), (std::vector<double>{0, 100, 200, 250}));
}

TEST(Simulate, EndsWithCollapseRow) {
  rw::SimulationOptions o;
  o.t_end = 6e4;
  o.dt = 20.0;
  o.output_times = {0.0, 3e4};
  const auto rec = rw::simulate(ex2(), o);
  ASSERT_TRUE(rec.collapsed);
  EXPECT_NEAR(rec.states.back().t, rec.collapse_time, 1e-9);
  EXPECT_GT(rec.states.back().q_l - ex2().q_star, 50.0);
}

TEST(Simulate, FlatOceanIsStill) {
  const auto flat = rw::build_configuration(3700.0, 3700.0, 3700.0, {});
  for (const auto& s : rw::simulate(flat, {}).states) {
    EXPECT_EQ(s.amplitude, 0.0);
    EXPECT_EQ(s.mass_rel_error, 0.0);
  }
}
