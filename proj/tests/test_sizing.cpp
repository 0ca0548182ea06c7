#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "emcad/error.hpp"
#include "emcad/sizing.hpp"
#include "emcad/units.hpp"
#include "oracles.hpp"

using namespace emcad;

TEST(OutputCoefficient, Examples) {
    EXPECT_DOUBLE_EQ(output_coefficient(1, 1, 1, 1), 1.0);
    EXPECT_NEAR(output_coefficient(100, 0.25, 0.2, 1000), 8.0, 1e-12);
    const double base = output_coefficient(10, 0.3, 0.2, 1500);
    EXPECT_NEAR(output_coefficient(20, 0.3, 0.2, 1500), 2 * base, 1e-12 * base);
    EXPECT_NEAR(output_coefficient(10, 0.6, 0.2, 1500), base / 4, 1e-12 * base);
    EXPECT_THROW(output_coefficient(0, 1, 1, 1), DomainError);
    EXPECT_THROW(output_coefficient(1, -1, 1, 1), DomainError);
}

TEST(SpecificMagneticLoading, Examples) {
    EXPECT_EQ(specific_magnetic_loading(4, 0.0, 0.25, 0.2), 0.0);
    EXPECT_NEAR(specific_magnetic_loading(4, 0.05, 0.25, 0.2), 0.2 / (kPi * 0.05), 1e-12);
    EXPECT_NEAR(specific_magnetic_loading(4, 0.05, 0.25, 0.2), 1.2732, 1e-4);
    EXPECT_EQ(specific_magnetic_loading(2, 0.1, 0.25, 0.2), specific_magnetic_loading(4, 0.05, 0.25, 0.2));
    EXPECT_THROW(specific_magnetic_loading(3, 0.05, 0.25, 0.2), DomainError);
    EXPECT_THROW(specific_magnetic_loading(0, 0.05, 0.25, 0.2), DomainError);
    EXPECT_NEAR(flux_per_pole_from_loading(4, 1.2732395447351628, 0.25, 0.2), 0.05, 1e-12);
}

TEST(SpecificElectricLoading, Examples) {
    EXPECT_NEAR(specific_electric_loading(kPi, 1.0), 1.0, 1e-15);
    EXPECT_NEAR(specific_electric_loading(10000, 0.25), 12732.4, 0.05);
    EXPECT_NEAR(specific_electric_loading(10000, 0.125), 2 * specific_electric_loading(10000, 0.25), 1e-9);
    EXPECT_THROW(specific_electric_loading(0, 1), DomainError);
}

TEST(SeparateMainDimensions, Examples) {
    const auto fixed = separate_main_dimensions(1.0, FixedDiameter{1.0}, 4);
    EXPECT_DOUBLE_EQ(fixed.l, 1.0);
    const auto r = separate_main_dimensions(0.0125, RatioPolicy{1.0}, 4);
    // d³·π/4 = 0.0125, cube root by an independent bisection
    const double d_ref = oracle::cube_root(0.0125 * 4 / kPi);
    EXPECT_NEAR(r.d, d_ref, 1e-12);
    EXPECT_NEAR(r.d, 0.2515, 5e-5);
    EXPECT_NEAR(r.l, 0.19756, 5e-5);
    EXPECT_NEAR(r.l, kPi * r.d / 4, 1e-12);
    const auto fl = separate_main_dimensions(0.02, FixedLength{0.2}, 4);
    EXPECT_NEAR(fl.d, std::sqrt(0.1), 1e-12);
    EXPECT_THROW(separate_main_dimensions(0.0, RatioPolicy{}, 4), DomainError);
    EXPECT_THROW(separate_main_dimensions(1.0, FixedDiameter{-1}, 4), DomainError);
    EXPECT_THROW(separate_main_dimensions(1.0, RatioPolicy{1.0}, 3), DomainError);
}

TEST(Sizing, RandomHomogeneityAndRoundTrips) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int i = 0; i < 300; ++i) {
        const double p = u(rng) * 100, d = u(rng) * 0.1, l = u(rng) * 0.1, n = u(rng) * 300, k = u(rng);
        const double c0 = output_coefficient(p, d, l, n);
        EXPECT_NEAR(output_coefficient(k * p, d, l, n), k * c0, 1e-12 * k * c0);
        EXPECT_NEAR(output_coefficient(p, k * d, l, n), c0 / (k * k), 1e-12 * c0 / (k * k));
        EXPECT_NEAR(output_coefficient(p, d, k * l, n), c0 / k, 1e-12 * c0 / k);

        const int poles = 2 * (1 + static_cast<int>(u(rng)));
        const double phi = u(rng) * 0.01;
        const double bav = specific_magnetic_loading(poles, phi, d, l);
        EXPECT_NEAR(specific_magnetic_loading(poles, k * phi, d, l), k * bav, 1e-12 * k * bav);

        const double d2l = p / (c0 * n);
        const ShapePolicy policies[] = {RatioPolicy{u(rng) * 0.3}, FixedDiameter{d}, FixedLength{l}};
        for (const auto& pol : policies) {
            const auto md = separate_main_dimensions(d2l, pol, poles);
            EXPECT_NEAR(md.d * md.d * md.l, d2l, 1e-12 * d2l);
            EXPECT_NEAR(output_coefficient(p, md.d, md.l, n), c0, 1e-9 * c0);
        }
    }
}

TEST(Sizing, LoadingValidationAndSpeed) {
    EXPECT_NO_THROW(validate_loadings({0.5, 25000}));
    EXPECT_THROW(validate_loadings({2.6, 25000}), DomainError);
    EXPECT_THROW(validate_loadings({0.5, 0}), DomainError);
    EXPECT_DOUBLE_EQ(synchronous_speed_rpm(50, 4), 1500.0);
    EXPECT_DOUBLE_EQ(synchronous_speed_rpm(60, 2), 3600.0);
}
