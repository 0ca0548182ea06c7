#pragma once

#include <span>
#include <string>

#include "emcad/curve.hpp"
#include "emcad/materials.hpp"
#include "emcad/parallel.hpp"
#include "emcad/sizing.hpp"

namespace emcad::induction {

enum class StatorConnection { star, delta };

struct Spec {
    double power_kw = 0.0;  // shaft output
    double line_voltage = 0.0;
    double frequency = 50.0;
    int phases = 3;
    int poles = 4;
    double assumed_efficiency = 0.85;
    double assumed_pf = 0.85;
    double winding_factor = 0.955;
    std::string material;

    bool operator==(const Spec&) const = default;
};

void validate(const Spec& spec);

struct Constants {
    double b_av = 0.45;      // T
    double ac = 23000.0;     // A/m
    double b_av_min = 0.30;
    double b_av_max = 0.65;
    double ac_min = 5000.0;
    double ac_max = 45000.0;
    // C0 = c0_factor·Kw·B_av·ac·1e-3  [kVA per m³·rps]
    double c0_factor = 11.0;
    double single_phase_derating = 0.6;
    double l_over_tau = 1.0;
    // Air gap g[mm] = air_gap_base_mm + air_gap_coeff_mm·√(D·L), D and L in m.
    double air_gap_base_mm = 0.2;
    double air_gap_coeff_mm = 2.0;
    int slots_per_pole_per_phase = 3;
    int single_phase_slots_per_pole = 6;
    StatorConnection stator_connection = StatorConnection::delta;
    double stator_current_density_a_mm2 = 5.0;
    double bar_current_density_a_mm2 = 5.0;
    double ring_current_density_a_mm2 = 5.0;
    double stator_resistivity_ohm_m = 2.1e-8;
    double rotor_resistivity_ohm_m = 2.1e-8;
    // Specific slot+overhang leakage permeance (dimensionless).
    double leakage_permeance = 4.0;
    double x2_over_x1 = 1.0;
    // First rotor-bar candidate is S ± rotor_slot_offset; larger offsets are
    // tried until the combination guard passes.
    int rotor_slot_offset = 3;
    int torque_grid_points = 200;

    bool operator==(const Constants&) const = default;
};

void validate(const Constants& c);

struct EquivalentCircuit {
    double r1 = 0.0, x1 = 0.0, r2 = 0.0, x2 = 0.0;  // Ω per phase, referred
    bool operator==(const EquivalentCircuit&) const = default;
};

struct Design {
    double kva_input = 0.0;
    double synchronous_speed_rpm = 0.0;
    double output_coefficient = 0.0;  // kVA per m³·rps
    double d2l = 0.0;
    MainDimensions main;
    Loadings loadings;  // design (assumed) loadings
    double flux_per_pole = 0.0;
    double phase_voltage = 0.0;
    double phase_current = 0.0;
    int stator_slots = 0;
    int conductors_per_slot = 0;
    int stator_turns_per_phase = 0;
    double total_ampere_conductors = 0.0;
    double ac_actual = 0.0;
    double conductor_area = 0.0;  // m²
    double air_gap = 0.0;         // m
    int rotor_bars = 0;
    double bar_current = 0.0;
    double bar_area = 0.0;
    double end_ring_current = 0.0;
    double end_ring_area = 0.0;
    EquivalentCircuit equivalent_circuit;
    double peak_torque_slip = 0.0;
    double peak_torque = 0.0;  // N·m
    CurveSeries torque_slip;              // slip → N·m
    CurveSeries torque_slip_sync_watts;   // slip → synchronous watts

    bool operator==(const Design&) const = default;
};

Design design_induction(const Spec& spec, const Material& material, const Constants& constants,
                        Execution exec = Execution::parallel);

struct SlipResult {
    double synchronous_speed_rpm = 0.0;
    double slip = 0.0;
};

// Motoring convention: rotor speed in [0, n_sync].
SlipResult slip(double frequency, int poles, double rotor_speed_rpm);

struct TorqueSlipInputs {
    EquivalentCircuit circuit;
    double v_phase = 0.0;
    double frequency = 50.0;
    int poles = 4;
    int phases = 3;
};

double torque_at_slip(const TorqueSlipInputs& in, double s);

// Evaluates T(s) over `s_grid` ⊂ (0, 1]. s = 0 is a domain error.
CurveSeries torque_slip_curve(const TorqueSlipInputs& in, std::span<const double> s_grid,
                              Execution exec = Execution::parallel);

// s_max = r2 / √(r1² + (x1 + x2)²)
double peak_torque_slip(const EquivalentCircuit& c);

// True when |S − Sr| avoids {0, 1, 2, poles}.
bool slot_combination_ok(int stator_slots, int rotor_bars, int poles);

}  // namespace emcad::induction
