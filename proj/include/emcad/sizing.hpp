#pragma once

#include <variant>

namespace emcad {

// Specific loadings. b_av in Wb/m², ac in A/m.
struct Loadings {
    double b_av = 0.0;
    double ac = 0.0;
    bool operator==(const Loadings&) const = default;
};

inline constexpr double kMaxMagneticLoading = 2.5;  // T

// Throws DomainError unless 0 < b_av ≤ 2.5 and ac > 0.
void validate_loadings(const Loadings& l);

struct MainDimensions {
    double d = 0.0;  // armature / bore diameter, m
    double l = 0.0;  // gross core length, m
    bool operator==(const MainDimensions&) const = default;
};

// C0 = P / (D²·L·N), with P in kVA (kW for DC) and N in rpm.
double output_coefficient(double p_kva, double d, double l, double n_rpm);

// B_av = p·φ / (π·D·L).
double specific_magnetic_loading(int poles, double flux_per_pole, double d, double l);

// Inverse of the above: flux per pole for a given B_av.
double flux_per_pole_from_loading(int poles, double b_av, double d, double l);

// ac = Iz·Z / (π·D).
double specific_electric_loading(double total_ampere_conductors, double d);

// How a D²L volume is split into diameter and length.
struct RatioPolicy {
    double l_over_tau = 1.0;  // core length over pole pitch πD/p
};
struct FixedDiameter {
    double d = 0.0;
};
struct FixedLength {
    double l = 0.0;
};
using ShapePolicy = std::variant<RatioPolicy, FixedDiameter, FixedLength>;

MainDimensions separate_main_dimensions(double d2l, const ShapePolicy& policy, int poles);

double synchronous_speed_rpm(double frequency, int poles);

// Throws DomainError unless poles is even and >= 2.
void require_even_poles(int poles, const char* what);

}  // namespace emcad
