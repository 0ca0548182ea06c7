#pragma once

#include <span>
#include <string>
#include <vector>

#include "emcad/curve.hpp"
#include "emcad/magnetic_circuit.hpp"
#include "emcad/materials.hpp"
#include "emcad/parallel.hpp"
#include "emcad/sizing.hpp"

namespace emcad::synchronous {

enum class RotorType { salient, round };

struct Spec {
    double kva = 0.0;
    double line_voltage = 0.0;  // star-connected armature
    double frequency = 50.0;
    double speed_rpm = 0.0;
    RotorType rotor_type = RotorType::salient;
    int phases = 3;
    double winding_factor = 0.955;
    std::string material;

    bool operator==(const Spec&) const = default;
};

void validate(const Spec& spec);

// Pole count 120·f/N; ValidationError("speed_rpm") unless it is an even integer.
int pole_count(double frequency, double speed_rpm);

struct Constants {
    double b_av = 0.6;
    double ac = 30000.0;
    double b_av_max = 0.8;
    double ac_min = 10000.0;
    double ac_max = 60000.0;
    double c0_factor = 11.0;
    double l_over_tau_salient = 1.0;
    double l_over_tau_round = 2.0;
    int salient_min_poles = 4;
    double salient_peripheral_speed_limit = 80.0;  // m/s
    double round_peripheral_speed_limit = 175.0;
    // Air-gap flux shape: pole arc / pole pitch (salient), or the average
    // to peak gap density ratio of a distributed field (round).
    double pole_arc_ratio = 0.65;
    double round_gap_flux_factor = 0.6366;
    int slots_per_pole_per_phase = 3;
    double slot_opening_ratio = 0.3;  // opening / slot pitch
    double slot_fill = 0.4;
    double stator_current_density_a_mm2 = 4.0;
    double short_circuit_ratio = 1.0;
    double tooth_flux_density = 1.7;
    double core_flux_density = 1.3;
    double field_current_density_a_mm2 = 3.0;
    double field_fill_factor = 0.6;
    double exciter_voltage = 110.0;
    double exciter_reserve = 0.2;
    double full_load_field_ratio = 2.0;
    double field_coil_height_ratio = 0.25;  // coil height / pole pitch
    double resistivity_ohm_m = 2.1e-8;
    double occ_max_field_ratio = 1.6;  // grid top over no-load field current
    int occ_points = 41;
    int core_loss_points = 40;
    bool carter_exact = false;

    bool operator==(const Constants&) const = default;
};

void validate(const Constants& c);

// Per-pole OCC magnetic circuit: effective gap, teeth, stator core.
struct PoleCircuit {
    double gap_length = 0.0;  // Carter-corrected, m
    double gap_area = 0.0;
    double teeth_length = 0.0;
    double teeth_area = 0.0;
    double core_length = 0.0;
    double core_area = 0.0;
    bool include_iron = true;

    std::vector<CircuitSegment> segments(const Material& m) const;
    double gap_reluctance() const;
    bool operator==(const PoleCircuit&) const = default;
};

struct Design {
    int poles = 0;
    double output_coefficient = 0.0;  // kVA/(m³·rpm)
    double d2l = 0.0;
    MainDimensions main;
    Loadings loadings;
    double peripheral_speed = 0.0;
    double flux_per_pole = 0.0;
    double phase_voltage = 0.0;
    double phase_current = 0.0;
    int stator_slots = 0;
    int conductors_per_slot = 0;
    int turns_per_phase = 0;
    double total_ampere_conductors = 0.0;
    double ac_actual = 0.0;
    double air_gap = 0.0;
    double slot_pitch = 0.0;
    double slot_opening = 0.0;
    double slot_depth = 0.0;
    double core_depth = 0.0;
    double carter_k = 1.0;
    PoleCircuit pole_circuit;
    double frequency = 0.0;
    double winding_factor = 0.0;
    double no_load_field_mmf = 0.0;  // At per pole
    double full_load_field_mmf = 0.0;
    int field_turns_per_pole = 0;
    double field_conductor_area = 0.0;
    double field_current_nl = 0.0;
    double field_current_fl = 0.0;
    double field_winding_depth = 0.0;
    double stator_core_loss = 0.0;
    CurveSeries occ;               // field current A → line EMF V
    CurveSeries core_loss_curve;   // T → W/kg
    CurveSeries field_winding_depth_curve;  // field MMF At → depth m

    bool operator==(const Design&) const = default;
};

Design design_synchronous(const Spec& spec, const Material& material, const Constants& constants,
                          Execution exec = Execution::parallel);

// K_c = y_s / (y_s − γ·g). Rational γ = (w/g)²/(5 + w/g) by default, or the
// conformal-map form when `exact` is set.
double carter_coefficient(double slot_pitch, double slot_opening, double gap, bool exact = false);

// Line EMF versus field current over `field_current_grid` (starts at 0,
// increasing).
CurveSeries open_circuit_characteristic(const Design& design, const Material& material,
                                        std::span<const double> field_current_grid,
                                        Execution exec = Execution::parallel);

// Slope of the unsaturated air-gap line, V per field ampere.
double air_gap_line_slope(const Design& design);

}  // namespace emcad::synchronous
