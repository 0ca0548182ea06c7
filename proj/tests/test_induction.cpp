#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "emcad/error.hpp"
#include "emcad/induction.hpp"
#include "oracles.hpp"

using namespace emcad;
using namespace emcad::induction;

namespace {

const Material& steel() { return find_material(bundled_material_library(), "M270_35A"); }

Spec base_spec() {
    Spec s;
    s.power_kw = 15;
    s.line_voltage = 400;
    s.frequency = 50;
    s.phases = 3;
    s.poles = 4;
    s.material = "M270_35A";
    return s;
}

// Direct evaluation of the approximate-circuit torque expression.
double oracle_torque(const TorqueSlipInputs& in, double s) {
    const auto& c = in.circuit;
    const double ws = 2.0 * std::numbers::pi * in.frequency / (in.poles / 2.0);
    const double z2 = std::pow(c.r1 + c.r2 / s, 2) + std::pow(c.x1 + c.x2, 2);
    return in.phases * in.v_phase * in.v_phase * (c.r2 / s) / (ws * z2);
}

}  // namespace

TEST(Induction, SlipExamples) {
    const auto r = slip(50, 4, 1440);
    EXPECT_DOUBLE_EQ(r.synchronous_speed_rpm, 1500);
    EXPECT_NEAR(r.slip, 0.04, 1e-12);
    EXPECT_DOUBLE_EQ(slip(50, 4, 0).slip, 1.0);
    EXPECT_DOUBLE_EQ(slip(60, 6, 1200).slip, 0.0);
    EXPECT_THROW(slip(50, 4, 1600), DomainError);
    EXPECT_THROW(slip(50, 3, 1000), DomainError);
}

TEST(Induction, SlotCombinationGuard) {
    EXPECT_FALSE(slot_combination_ok(36, 36, 4));
    EXPECT_FALSE(slot_combination_ok(36, 35, 4));
    EXPECT_FALSE(slot_combination_ok(36, 34, 4));
    EXPECT_FALSE(slot_combination_ok(36, 32, 4));
    EXPECT_FALSE(slot_combination_ok(36, 40, 4));
    EXPECT_TRUE(slot_combination_ok(36, 33, 4));
    EXPECT_TRUE(slot_combination_ok(36, 39, 4));
}

TEST(Induction, TorqueMatchesOracleAndPeaksAtSmax) {
    TorqueSlipInputs in{{0.5, 1.2, 0.4, 1.2}, 230, 50, 4, 3};
    const auto grid = linear_grid(1e-3, 1.0, 1000);
    const auto curve = torque_slip_curve(in, grid);
    for (const auto& p : curve.points()) {
        EXPECT_NEAR(p.y, oracle_torque(in, p.x), 1e-9 * std::abs(p.y));
    }
    const double s_max = peak_torque_slip(in.circuit);
    EXPECT_NEAR(s_max, 0.4 / std::hypot(0.5, 2.4), 1e-15);
    const auto ys = curve.ys();
    EXPECT_LE(std::abs(grid[oracle::argmax(ys)] - s_max), grid[1] - grid[0]);
}

TEST(Induction, TorqueCurveDomain) {
    TorqueSlipInputs in{{0.5, 1.2, 0.4, 1.2}, 230, 50, 4, 3};
    const std::vector<double> with_zero{0.0, 0.5, 1.0};
    EXPECT_THROW(torque_slip_curve(in, with_zero), DomainError);
    const std::vector<double> above{0.5, 1.1};
    EXPECT_THROW(torque_slip_curve(in, above), DomainError);
    EXPECT_THROW(torque_at_slip(in, 0.0), DomainError);
    auto bad = in;
    bad.circuit.r2 = 0;
    EXPECT_THROW(torque_slip_curve(in = bad, std::vector<double>{0.5, 1.0}), DomainError);
}

TEST(Induction, SerialAndParallelAgree) {
    TorqueSlipInputs in{{0.3, 0.9, 0.25, 0.9}, 230, 50, 6, 3};
    const auto grid = linear_grid(1e-4, 1.0, 20000);
    const auto a = torque_slip_curve(in, grid, Execution::serial);
    const auto b = torque_slip_curve(in, grid, Execution::parallel);
    EXPECT_EQ(a, b);
}

TEST(Induction, DesignRespectsLoadingsAndSlotRules) {
    const auto d = design_induction(base_spec(), steel(), {});
    const Constants c;
    EXPECT_EQ(d.stator_slots, 36);
    EXPECT_EQ(d.conductors_per_slot % 2, 0);
    EXPECT_TRUE(slot_combination_ok(d.stator_slots, d.rotor_bars, 4));
    EXPECT_GE(d.ac_actual, c.ac_min);
    EXPECT_LE(d.ac_actual, c.ac_max);
    EXPECT_NEAR(d.main.d * d.main.d * d.main.l, d.d2l, 1e-12 * d.d2l);
    EXPECT_NEAR(d.main.l, std::numbers::pi * d.main.d / 4.0, 1e-12);
    EXPECT_GT(d.air_gap, 0);
    EXPECT_GT(d.peak_torque, 0);
    EXPECT_EQ(d.torque_slip.size(), static_cast<std::size_t>(c.torque_grid_points));
    const auto ys = d.torque_slip.ys();
    const auto xs = d.torque_slip.xs();
    if (d.peak_torque_slip < 1.0) {
        EXPECT_LE(std::abs(xs[oracle::argmax(ys)] - d.peak_torque_slip), xs[1] - xs[0] + 1e-12);
    }
    // sync-watts curve is torque scaled by synchronous mechanical speed
    const double ws = 2.0 * std::numbers::pi * 1500 / 60.0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        EXPECT_NEAR(d.torque_slip_sync_watts.points()[i].y, ys[i] * ws, 1e-9 * ys[i] * ws);
    }
}

TEST(Induction, DesignDeterministicAcrossExecution) {
    EXPECT_EQ(design_induction(base_spec(), steel(), {}, Execution::serial),
              design_induction(base_spec(), steel(), {}, Execution::parallel));
}

TEST(Induction, LoadingOutsideBandIsInfeasible) {
    Constants c;
    c.b_av = 0.8;
    try {
        design_induction(base_spec(), steel(), c);
        FAIL();
    } catch (const InfeasibleDesign& e) {
        EXPECT_EQ(e.bound(), "b_av_min <= b_av <= b_av_max");
    }
}

TEST(Induction, Validation) {
    auto s = base_spec();
    s.poles = 5;
    EXPECT_THROW(validate(s), ValidationError);
    s = base_spec();
    s.assumed_pf = 1.5;
    EXPECT_THROW(validate(s), ValidationError);
    s = base_spec();
    s.power_kw = 0;
    try {
        validate(s);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field_path(), "power_kw");
    }
}
