#pragma once

#include <span>
#include <string>
#include <vector>

#include "emcad/curve.hpp"
#include "emcad/magnetic_circuit.hpp"
#include "emcad/materials.hpp"
#include "emcad/parallel.hpp"

namespace emcad::srm {

enum class TargetKind { power, torque };

struct Spec {
    TargetKind target_kind = TargetKind::power;
    double target_value = 0.0;  // kW or N·m
    double speed_rpm = 0.0;     // rated speed; basis for air-gap power
    double dc_voltage = 0.0;
    int phases = 3;
    int stator_poles = 6;
    int rotor_poles = 4;
    double beta_s = 0.0;  // rad
    double beta_r = 0.0;  // rad
    double air_gap = 0.0;  // m
    double peak_current = 0.0;  // A
    std::string material;

    bool operator==(const Spec&) const = default;
};

// Field-level checks; ValidationError.
void validate(const Spec& spec);

// Pole-arc feasibility triangle; InfeasibleDesign whose bound() is one of
// "beta_s <= beta_r", "beta_s >= 2π/(m·n_r)", "beta_s + beta_r < 2π/n_r".
void check_feasibility(const Spec& spec);
bool feasible_arcs(double beta_s, double beta_r, int phases, int rotor_poles);

double target_torque(const Spec& spec);  // N·m

// Recipes for the unaligned flux paths.
enum class PathRecipe {
    face_to_slot_bottom,
    face_to_pole_side,
    side_to_pole_tip,
    side_to_pole_side,
    interpolar_leakage,
    end_fringe,
    end_winding,
};

struct PathEntry {
    PathRecipe recipe = PathRecipe::face_to_slot_bottom;
    double enclosure_fraction = 1.0;
    bool operator==(const PathEntry&) const = default;
};

std::vector<PathEntry> default_path_table();

struct Constants {
    // Output-equation constants: P = k_e·k_d·(π²/120)·k_2·B·A_sp·D²·L·N.
    double efficiency = 0.9;
    double duty = 1.0;
    double k2 = 0.7;
    double magnetic_loading = 1.7;  // T
    double electric_loading = 30000.0;  // A/m
    double l_over_tau = 2.0;  // over the stator pole pitch
    double stator_back_iron_factor = 1.2;  // × stator pole width / 2
    double rotor_back_iron_factor = 1.2;
    double rotor_pole_height_ratio = 0.7;  // × rotor pole width
    double pole_flux_density = 1.6;  // T, for the turns estimate
    double current_density_a_mm2 = 6.0;
    double fill_factor = 0.45;
    double max_pole_height_to_bore = 1.0;
    std::vector<PathEntry> flux_paths = default_path_table();
    int profile_points = 181;
    double torque_tolerance = 0.02;  // fraction of target
    double refinement_step = 0.0349065850398866;  // rad (2°)

    bool operator==(const Constants&) const = default;
};

void validate(const Constants& c);

struct Geometry {
    int phases = 0;
    int stator_poles = 0;
    int rotor_poles = 0;
    double beta_s = 0.0;
    double beta_r = 0.0;
    double air_gap = 0.0;
    double bore_diameter = 0.0;
    double stack_length = 0.0;
    double stator_pole_height = 0.0;
    double rotor_pole_height = 0.0;
    double stator_back_iron = 0.0;
    double rotor_back_iron = 0.0;
    double stator_pole_width = 0.0;
    double rotor_pole_width = 0.0;
    double shaft_diameter = 0.0;
    double outer_diameter = 0.0;
    int turns_per_phase = 0;

    bool operator==(const Geometry&) const = default;
};

Geometry size_srm(const Spec& spec, const Material& material, const Constants& constants);

struct FluxPath {
    int index = 0;
    std::string name;
    std::vector<CircuitSegment> segments;
    double enclosure_fraction = 1.0;
    double solved_b = 0.0;        // T, peak along the path at the evaluation current
    double reluctance = 0.0;      // At/Wb
    double inductance_contribution = 0.0;  // H

    bool operator==(const FluxPath&) const = default;
};

struct AlignedResult {
    double la = 0.0;
    FluxPath main_path;
};

AlignedResult aligned_inductance(const Geometry& geom, double current, const Material& material);

// Linear (small-current) aligned inductance, N²/Σ(l/μA) at initial permeability.
double aligned_inductance_linear(const Geometry& geom, const Material& material);

struct UnalignedResult {
    double lu = 0.0;
    std::vector<FluxPath> paths;
};

// Iron is linear at the material's initial permeability; `current` only
// sets the reported per-path flux density.
UnalignedResult unaligned_inductance(const Geometry& geom, const Material& material,
                                     std::span<const PathEntry> path_table, double current);

// Angles over one rotor pole pitch, θ = 0 unaligned.
struct ProfileRegions {
    double pitch = 0.0;
    double overlap_start = 0.0;  // rise begins
    double full_overlap = 0.0;   // rise ends, dwell at La
    double dwell_end = 0.0;      // fall begins
    double overlap_end = 0.0;    // fall ends
    double aligned = 0.0;        // pitch / 2

    bool operator==(const ProfileRegions&) const = default;
};

ProfileRegions profile_regions(double beta_s, double beta_r, int rotor_poles);

double inductance_at(const ProfileRegions& r, double la, double lu, double theta);

CurveSeries inductance_profile(const ProfileRegions& regions, double la, double lu,
                               std::span<const double> theta_grid,
                               Execution exec = Execution::parallel);

// Convenience: solves La at `current` and Lu, then evaluates the profile.
CurveSeries inductance_profile(const Geometry& geom, double current, const Material& material,
                               std::span<const PathEntry> path_table,
                               std::span<const double> theta_grid,
                               Execution exec = Execution::parallel);

struct TorqueResult {
    double torque = 0.0;        // N·m
    double airgap_power = 0.0;  // W at the given speed
    double stroke_energy = 0.0; // J
};

TorqueResult average_torque(double la, double lu, double current, int phases, int rotor_poles,
                            double speed_rpm);

struct Report {
    Geometry geometry;
    double la = 0.0;
    double lu = 0.0;
    double evaluation_current = 0.0;
    std::vector<FluxPath> flux_paths;  // aligned main path first
    ProfileRegions regions;
    CurveSeries profile;  // rotor angle rad → H
    double average_torque = 0.0;
    double airgap_power = 0.0;
    double target_torque = 0.0;
    double torque_gap = 0.0;  // average − target
    bool target_achieved = false;

    bool operator==(const Report&) const = default;
};

Report evaluate_srm(const Spec& spec, const Geometry& geom, const Material& material,
                    const Constants& constants, Execution exec = Execution::parallel);

// size_srm followed by evaluate_srm.
Report design_srm(const Spec& spec, const Material& material, const Constants& constants,
                  Execution exec = Execution::parallel);

struct Suggestion {
    std::string parameter;
    std::string direction;  // "increase" | "decrease"
    double suggested_value = 0.0;
    std::string rationale;
};

std::vector<Suggestion> suggest_refinement(const Report& report, const Spec& spec,
                                           const Constants& constants);

const char* recipe_name(PathRecipe r);

}  // namespace emcad::srm
