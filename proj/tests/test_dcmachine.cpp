#include <gtest/gtest.h>

#include <cmath>

#include "emcad/dcmachine.hpp"
#include "emcad/error.hpp"

using namespace emcad;
using namespace emcad::dc;

namespace {

const Material& steel() { return find_material(bundled_material_library(), "M270_35A"); }

Spec base_spec() {
    Spec s;
    s.power_kw = 10;
    s.voltage = 220;
    s.speed_rpm = 1200;
    s.poles = 4;
    s.winding = Winding::lap;
    s.material = "M270_35A";
    return s;
}

}  // namespace

TEST(DcMachine, EmfEquationExample) {
    // φ = 0.02 Wb, Z = 500, N = 1000 rpm, p = 4, lap (a = 4): E = 166.67 V
    EXPECT_NEAR(armature_emf(0.02, 500, 1000, 4, 4), 0.02 * 500 * 1000 / 60.0, 1e-12);
    // wave winding doubles EMF for a 4-pole machine
    EXPECT_NEAR(armature_emf(0.02, 500, 1000, 4, 2), 2 * armature_emf(0.02, 500, 1000, 4, 4), 1e-12);
    EXPECT_THROW(armature_emf(0.0, 500, 1000, 4, 4), DomainError);
}

TEST(DcMachine, ParallelPaths) {
    EXPECT_EQ(parallel_paths_for(Winding::lap, 6), 6);
    EXPECT_EQ(parallel_paths_for(Winding::wave, 6), 2);
}

TEST(DcMachine, EmfWithinOneConductorResolution) {
    for (double v : {110.0, 220.0, 440.0}) {
        for (auto w : {Winding::lap, Winding::wave}) {
            for (int p : {2, 4, 6}) {
                auto s = base_spec();
                s.voltage = v;
                s.winding = w;
                s.poles = p;
                try {
                    const auto d = design_dc(s, steel(), {});
                    EXPECT_EQ(d.armature_conductors % 2, 0);
                    EXPECT_LE(std::abs(d.emf_check - v), d.emf_resolution + 1e-9);
                    EXPECT_EQ(d.slots * d.conductors_per_slot, d.armature_conductors);
                    EXPECT_EQ(d.conductors_per_slot % 2, 0);
                    EXPECT_NEAR(d.conductor_current * d.parallel_paths, s.power_kw * 1000 / v, 1e-9);
                } catch (const InfeasibleDesign& e) {
                    EXPECT_EQ(e.bound(), "ac_min <= ac <= ac_max");
                }
            }
        }
    }
}

TEST(DcMachine, BaseDesign) {
    const auto d = design_dc(base_spec(), steel(), {});
    EXPECT_EQ(d.parallel_paths, 4);
    EXPECT_NEAR(d.main.d * d.main.d * d.main.l, d.d2l, 1e-12 * d.d2l);
    EXPECT_NEAR(d.output_coefficient, M_PI * M_PI * 0.5 * 25000 * 1e-3, 1e-9);
}

TEST(DcMachine, InfeasibleAndValidation) {
    Constants c;
    c.b_av = 1.0;
    EXPECT_THROW(design_dc(base_spec(), steel(), c), InfeasibleDesign);
    auto s = base_spec();
    s.poles = 3;
    EXPECT_THROW(validate(s), ValidationError);
    c = {};
    c.max_conductors_per_slot = 1;
    EXPECT_THROW(validate(c), ValidationError);
}
