#include <doctest.h>

#include <cmath>

#include "hoeckend/error.hpp"
#include "hoeckend/force.hpp"
#include "hoeckend/spring.hpp"
#include "hoeckend/sweep.hpp"

using namespace hoeckend;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Config;
}

bool same_bits(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

void check_identical(const Table& a, const Table& b) {
  REQUIRE(a.columns == b.columns);
  REQUIRE(a.rows.size() == b.rows.size());
  CHECK(a.ok == b.ok);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    for (std::size_t c = 0; c < a.rows[i].size(); ++c) CHECK(same_bits(a.rows[i][c], b.rows[i][c]));
  }
}

const SweepSpec kPinch{{{"h2_mm", 0, 50, 51}, {"theta1_deg", 0, 40, 41}}, SweepTarget::PinchForce, {}};
const SweepSpec kEnvelope{{{"theta1_deg", 0, 40, 41}, {"theta2_deg", 0, 60, 61}},
                          SweepTarget::EnvelopeForces, {}};

}  // namespace

TEST_CASE("target names and columns") {
  CHECK(parse_target("PinchForce") == SweepTarget::PinchForce);
  CHECK(kind_of([] { parse_target("Nope"); }) == ErrorKind::UnknownVariable);
  CHECK(target_columns(SweepTarget::PinchForce) == std::vector<std::string>{"h2_mm", "theta1_deg", "F1_N"});
  CHECK(target_columns(SweepTarget::SpringAngle).size() == 6);
}

TEST_CASE("pinch surface grid") {
  const Table t = run_sweep(kPinch, {});
  REQUIRE(t.rows.size() == 51u * 41u);
  for (bool ok : t.ok) CHECK(ok);
  // row-major: first variable outermost
  CHECK(t.rows[0][0] == 0.0);
  CHECK(t.rows[1][1] == 1.0);
  CHECK(t.rows[41][0] == 1.0);
  for (int i = 0; i < 51; ++i) {
    for (int j = 0; j < 41; ++j) {
      const double f = t.rows[i * 41 + j][2];
      if (j > 0) CHECK(f > t.rows[i * 41 + j - 1][2]);
      if (i > 0) CHECK(f < t.rows[(i - 1) * 41 + j][2]);
    }
  }
  const ConstantPinchModel m = default_pinch_model(FingerParams{});
  CHECK(t.rows[0][2] == doctest::Approx(pinch_force_constant(m, 400, 0, 0, 180)));
}

TEST_CASE("spring angle sweep is a pointwise map") {
  const SweepSpec spec{{{"theta1_deg", 0, 30, 7}, {"theta2_deg", -10, 50, 13}}, SweepTarget::SpringAngle, {}};
  const Table t = run_sweep(spec, {});
  REQUIRE(t.rows.size() == 91);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    const double t1 = deg_to_rad(r[0]), t2 = deg_to_rad(r[1]);
    if (t.ok[i]) {
      CHECK(r[2] == doctest::Approx(rad_to_deg(opening_angle(FingerParams{}, t1, t2))).epsilon(1e-12));
      CHECK(r[3] == doctest::Approx(spring_torque(FingerParams{}, t1, t2)).epsilon(1e-12));
    } else {
      CHECK(std::isnan(r[2]));
      CHECK_FALSE(std::isnan(r[0]));
    }
  }
}

TEST_CASE("degenerate single-point variable") {
  const SweepSpec spec{{{"h2_mm", 10, 10, 2}, {"theta1_deg", 5, 5, 2}}, SweepTarget::PinchForce, {}};
  const Table t = run_sweep(spec, {});
  REQUIRE(t.rows.size() == 4);
  CHECK(t.rows[0] == t.rows[1]);
  CHECK(t.rows[0] == t.rows[3]);
}

TEST_CASE("spec errors") {
  CHECK(kind_of([] { run_sweep({{{"bogus", 0, 1, 2}}, SweepTarget::PinchForce, {}}, {}); }) ==
        ErrorKind::UnknownVariable);
  CHECK(kind_of([] { run_sweep({{{"theta2_deg", 0, 1, 2}}, SweepTarget::PinchForce, {}}, {}); }) ==
        ErrorKind::TargetMismatch);
  CHECK(kind_of([] { run_sweep({{{"h2_mm", 0, 1, 1}}, SweepTarget::PinchForce, {}}, {}); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([] {
          run_sweep({{{"h2_mm", 0, 1, 2}}, SweepTarget::PinchForce, {{"k_q", 1.0}}}, {});
        }) == ErrorKind::UnknownVariable);
}

TEST_CASE("fixed overrides") {
  SweepSpec a = kPinch;
  a.fixed["tau_A"] = 800;
  const Table base = run_sweep(kPinch, {});
  const Table doubled = run_sweep(a, {});
  for (std::size_t i = 0; i < base.rows.size(); ++i) {
    CHECK(doubled.rows[i][2] == doctest::Approx(2 * base.rows[i][2]).epsilon(1e-12));
  }
}

TEST_CASE("infeasible envelope points are kept and tagged") {
  const Table t = run_sweep(kEnvelope, {});
  REQUIRE(t.rows.size() == 41u * 61u);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (!t.ok[i]) {
      ++bad;
      CHECK(std::isnan(t.rows[i][2]));
      CHECK(std::isnan(t.rows[i][3]));
    }
  }
  CHECK(bad > 0);
  CHECK(bad < t.rows.size());
  // zero-spring column
  for (int i = 0; i < 41; ++i) {
    CHECK(t.rows[i * 61][3] == 0.0);
    CHECK(std::abs(t.rows[i * 61][2] - 400.0 / 150.0) < 1e-9);
  }
}

TEST_CASE("deviation target") {
  const SweepSpec spec{{{"lAC_ratio", 1.4, 1.6, 3}, {"lBD_ratio", 5.5, 6.5, 3}}, SweepTarget::Deviation, {}};
  const Table t = run_sweep(spec, {});
  REQUIRE(t.rows.size() == 9);
  CHECK(t.rows[4][0] == 1.5);
  CHECK(t.rows[4][1] == 6.0);
  CHECK(std::abs(t.rows[4][2] - 0.0164) <= 0.0005);
  const SweepSpec bad{{{"lAC_ratio", 0.5, 0.9, 2}}, SweepTarget::Deviation, {}};
  const Table tb = run_sweep(bad, {});
  CHECK_FALSE(tb.ok[0]);
}

TEST_CASE("parallel sweep equals serial reference") {
  check_identical(run_sweep(kPinch, {}), run_sweep_serial(kPinch, {}));
  check_identical(run_sweep(kEnvelope, {}), run_sweep_serial(kEnvelope, {}));
  const SweepSpec spring{{{"theta1_deg", 0, 40, 21}, {"theta2_deg", -5, 70, 31}}, SweepTarget::SpringAngle, {}};
  check_identical(run_sweep(spring, {}), run_sweep_serial(spring, {}));
}
