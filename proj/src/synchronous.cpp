#include "emcad/synchronous.hpp"

#include <cmath>

#include "emcad/error.hpp"
#include "emcad/units.hpp"

namespace emcad::synchronous {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

int round_to_even(double v) {
    const long n = std::lround(v / 2.0) * 2;
    return static_cast<int>(std::max(2L, n));
}

// EMF per unit flux, line value.
double line_emf_per_weber(const Design& d) {
    return kSqrt3 * 4.44 * d.frequency * d.winding_factor * d.turns_per_phase;
}

}  // namespace

int pole_count(double frequency, double speed_rpm) {
    if (!(frequency > 0.0)) throw ValidationError("frequency", "frequency: must be > 0");
    if (!(speed_rpm > 0.0)) throw ValidationError("speed_rpm", "speed_rpm: must be > 0");
    const double p = 120.0 * frequency / speed_rpm;
    const double r = std::round(p);
    if (std::abs(p - r) > 1e-9 * std::max(1.0, p) || r < 2.0 || static_cast<long>(r) % 2 != 0) {
        throw ValidationError("speed_rpm", "speed_rpm: 120·f/N = " + std::to_string(p) +
                                               " is not an even pole count");
    }
    return static_cast<int>(r);
}

void validate(const Spec& s) {
    if (!(s.kva > 0.0)) throw ValidationError("kva", "kva: must be > 0");
    if (!(s.line_voltage > 0.0)) throw ValidationError("line_voltage", "line_voltage: must be > 0");
    pole_count(s.frequency, s.speed_rpm);
    if (s.phases < 1) throw ValidationError("phases", "phases: must be >= 1");
    if (!(s.winding_factor > 0.0 && s.winding_factor <= 1.0)) {
        throw ValidationError("winding_factor", "winding_factor: must be in (0, 1]");
    }
    if (s.material.empty()) throw ValidationError("material", "material: must be named");
}

void validate(const Constants& c) {
    auto pos = [](double v, const char* name) {
        if (!(v > 0.0)) {
            throw ValidationError(std::string("constants.") + name,
                                  std::string("constants.") + name + ": must be > 0");
        }
    };
    auto frac = [](double v, const char* name) {
        if (!(v > 0.0 && v < 1.0)) {
            throw ValidationError(std::string("constants.") + name,
                                  std::string("constants.") + name + ": must be in (0, 1)");
        }
    };
    pos(c.b_av, "b_av");
    pos(c.ac, "ac");
    pos(c.b_av_max, "b_av_max");
    pos(c.ac_min, "ac_min");
    pos(c.ac_max, "ac_max");
    pos(c.c0_factor, "c0_factor");
    pos(c.l_over_tau_salient, "l_over_tau_salient");
    pos(c.l_over_tau_round, "l_over_tau_round");
    pos(c.salient_peripheral_speed_limit, "salient_peripheral_speed_limit");
    pos(c.round_peripheral_speed_limit, "round_peripheral_speed_limit");
    frac(c.pole_arc_ratio, "pole_arc_ratio");
    frac(c.round_gap_flux_factor, "round_gap_flux_factor");
    frac(c.slot_opening_ratio, "slot_opening_ratio");
    frac(c.slot_fill, "slot_fill");
    frac(c.field_fill_factor, "field_fill_factor");
    pos(c.stator_current_density_a_mm2, "stator_current_density_a_mm2");
    pos(c.short_circuit_ratio, "short_circuit_ratio");
    pos(c.tooth_flux_density, "tooth_flux_density");
    pos(c.core_flux_density, "core_flux_density");
    pos(c.field_current_density_a_mm2, "field_current_density_a_mm2");
    pos(c.exciter_voltage, "exciter_voltage");
    pos(c.field_coil_height_ratio, "field_coil_height_ratio");
    pos(c.resistivity_ohm_m, "resistivity_ohm_m");
    if (!(c.exciter_reserve >= 0.0 && c.exciter_reserve < 1.0)) {
        throw ValidationError("constants.exciter_reserve", "constants.exciter_reserve: must be in [0, 1)");
    }
    if (!(c.full_load_field_ratio >= 1.0)) {
        throw ValidationError("constants.full_load_field_ratio",
                              "constants.full_load_field_ratio: must be >= 1");
    }
    if (!(c.occ_max_field_ratio > 1.0)) {
        throw ValidationError("constants.occ_max_field_ratio",
                              "constants.occ_max_field_ratio: must be > 1");
    }
    if (c.salient_min_poles < 2) {
        throw ValidationError("constants.salient_min_poles", "constants.salient_min_poles: must be >= 2");
    }
    if (c.slots_per_pole_per_phase < 1) {
        throw ValidationError("constants.slots_per_pole_per_phase",
                              "constants.slots_per_pole_per_phase: must be >= 1");
    }
    if (c.occ_points < 5 || c.core_loss_points < 2) {
        throw ValidationError("constants.occ_points", "constants: need occ_points >= 5, core_loss_points >= 2");
    }
}

double carter_coefficient(double slot_pitch, double slot_opening, double gap, bool exact) {
    if (!(gap > 0.0)) throw DomainError("carter_coefficient: gap must be > 0");
    if (!(slot_opening >= 0.0)) throw DomainError("carter_coefficient: slot opening must be >= 0");
    if (!(slot_opening < slot_pitch)) {
        throw DomainError("carter_coefficient: slot opening must be smaller than the slot pitch");
    }
    const double r = slot_opening / gap;
    double gamma = 0.0;
    if (exact) {
        const double u = 0.5 * r;
        gamma = (4.0 / kPi) * (u * std::atan(u) - 0.5 * std::log1p(u * u));
    } else {
        gamma = r * r / (5.0 + r);
    }
    return slot_pitch / (slot_pitch - gamma * gap);
}

std::vector<CircuitSegment> PoleCircuit::segments(const Material& m) const {
    std::vector<CircuitSegment> s;
    s.push_back(CircuitSegment::air(gap_length, gap_area));
    if (include_iron) {
        s.push_back(CircuitSegment::iron(teeth_length, teeth_area, m));
        s.push_back(CircuitSegment::iron(core_length, core_area, m));
    }
    return s;
}

double PoleCircuit::gap_reluctance() const { return gap_length / (kMu0 * gap_area); }

double air_gap_line_slope(const Design& d) {
    return line_emf_per_weber(d) * d.field_turns_per_pole / d.pole_circuit.gap_reluctance();
}

CurveSeries open_circuit_characteristic(const Design& d, const Material& material,
                                        std::span<const double> grid, Execution exec) {
    if (grid.size() < 2 || grid.front() != 0.0) {
        throw DomainError("open_circuit_characteristic: grid must start at 0 with >= 2 points");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw DomainError("open_circuit_characteristic: grid must be increasing");
        }
    }
    const auto segments = d.pole_circuit.segments(material);
    const double k = line_emf_per_weber(d);
    const double turns = d.field_turns_per_pole;
    auto emf = map_grid(exec, grid, [&](double i_f) {
        return k * solve_series_magnetic_circuit(segments, turns * i_f).flux;
    });
    return CurveSeries("occ", "field current [A]", "line EMF [V]",
                       std::vector<double>(grid.begin(), grid.end()), emf);
}

Design design_synchronous(const Spec& spec, const Material& material, const Constants& c,
                          Execution exec) {
    validate(spec);
    validate(c);
    if (c.b_av > c.b_av_max) {
        throw InfeasibleDesign("b_av <= b_av_max", "specific magnetic loading " + std::to_string(c.b_av) +
                                                       " T exceeds " + std::to_string(c.b_av_max));
    }
    if (c.ac < c.ac_min || c.ac > c.ac_max) {
        throw InfeasibleDesign("ac_min <= ac <= ac_max",
                               "specific electric loading " + std::to_string(c.ac) + " A/m outside [" +
                                   std::to_string(c.ac_min) + ", " + std::to_string(c.ac_max) + "]");
    }

    Design d;
    const bool salient = spec.rotor_type == RotorType::salient;
    const int p = pole_count(spec.frequency, spec.speed_rpm);
    d.poles = p;
    d.frequency = spec.frequency;
    d.winding_factor = spec.winding_factor;
    d.loadings = {c.b_av, c.ac};
    if (salient && p < c.salient_min_poles) {
        throw InfeasibleDesign("salient_min_poles",
                               std::to_string(p) + "-pole machine needs a round rotor (salient rotors need >= " +
                                   std::to_string(c.salient_min_poles) + " poles)");
    }

    const double ns = spec.speed_rpm / 60.0;
    const double c0_rps = c.c0_factor * spec.winding_factor * c.b_av * c.ac * 1e-3;
    d.d2l = spec.kva / (c0_rps * ns);
    d.main = separate_main_dimensions(
        d.d2l, RatioPolicy{salient ? c.l_over_tau_salient : c.l_over_tau_round}, p);
    const double D = d.main.d;
    const double L = d.main.l;
    d.output_coefficient = output_coefficient(spec.kva, D, L, spec.speed_rpm);
    d.peripheral_speed = kPi * D * ns;
    const double v_limit = salient ? c.salient_peripheral_speed_limit : c.round_peripheral_speed_limit;
    if (d.peripheral_speed > v_limit) {
        throw InfeasibleDesign(salient ? "salient_peripheral_speed_limit" : "round_peripheral_speed_limit",
                               "peripheral speed " + std::to_string(d.peripheral_speed) +
                                   " m/s exceeds the " + (salient ? "salient" : "round") +
                                   " rotor limit " + std::to_string(v_limit) + " m/s" +
                                   (salient ? "; use a round rotor" : ""));
    }
    d.flux_per_pole = flux_per_pole_from_loading(p, c.b_av, D, L);

    // Armature winding (star).
    const int m = spec.phases;
    d.phase_voltage = spec.line_voltage / kSqrt3;
    d.phase_current = spec.kva * 1000.0 / (m * d.phase_voltage);
    const double turns_raw = d.phase_voltage / (4.44 * spec.frequency * d.flux_per_pole * spec.winding_factor);
    d.stator_slots = c.slots_per_pole_per_phase * m * p;
    d.conductors_per_slot = round_to_even(2.0 * m * turns_raw / d.stator_slots);
    const int total_conductors = d.conductors_per_slot * d.stator_slots;
    d.turns_per_phase = total_conductors / (2 * m);
    d.total_ampere_conductors = d.phase_current * total_conductors;
    d.ac_actual = specific_electric_loading(d.total_ampere_conductors, D);
    if (d.ac_actual < c.ac_min || d.ac_actual > c.ac_max) {
        throw InfeasibleDesign("ac_min <= ac <= ac_max",
                               "electric loading after turn rounding " + std::to_string(d.ac_actual) +
                                   " A/m outside limits");
    }

    // Air gap from the short-circuit ratio: gap MMF = SCR × armature MMF.
    const double shape = salient ? c.pole_arc_ratio : c.round_gap_flux_factor;
    const double b_gap = c.b_av / shape;
    const double at_armature = 1.35 * m * d.turns_per_phase * d.phase_current * spec.winding_factor / p;
    d.air_gap = kMu0 * c.short_circuit_ratio * at_armature / b_gap;

    // Slots and Carter's coefficient.
    d.slot_pitch = kPi * D / d.stator_slots;
    d.slot_opening = c.slot_opening_ratio * d.slot_pitch;
    d.carter_k = carter_coefficient(d.slot_pitch, d.slot_opening, d.air_gap, c.carter_exact);

    const double tau = kPi * D / p;
    const double sf = material.stacking_factor();
    const double teeth_net_area = d.flux_per_pole / c.tooth_flux_density;
    const double teeth_under_pole = shape * d.stator_slots / p;
    const double tooth_width = teeth_net_area / (L * sf * teeth_under_pole);
    const double slot_width = d.slot_pitch - tooth_width;
    if (!(slot_width > 0.0)) {
        throw InfeasibleDesign("tooth_width < slot_pitch",
                               "teeth at " + std::to_string(c.tooth_flux_density) +
                                   " T leave no slot width; raise tooth_flux_density or slots");
    }
    const double slot_area = d.conductors_per_slot * d.phase_current /
                             (c.stator_current_density_a_mm2 * 1e6) / c.slot_fill;
    d.slot_depth = slot_area / slot_width;
    d.core_depth = d.flux_per_pole / (2.0 * c.core_flux_density * L * sf);

    auto& pc = d.pole_circuit;
    pc.gap_length = d.carter_k * d.air_gap;
    pc.gap_area = shape * tau * L;
    pc.teeth_length = d.slot_depth;
    pc.teeth_area = teeth_net_area;
    pc.core_length = kPi * (D + 2.0 * d.slot_depth + d.core_depth) / (2.0 * p);
    pc.core_area = d.flux_per_pole / c.core_flux_density;

    // No-load field MMF: the drop at rated-EMF flux.
    const double flux_nl = d.phase_voltage / (4.44 * spec.frequency * spec.winding_factor * d.turns_per_phase);
    const auto segments = pc.segments(material);
    d.no_load_field_mmf = total_mmf_drop(segments, flux_nl);
    d.full_load_field_mmf = c.full_load_field_ratio * d.no_load_field_mmf;

    // Field conductor from the exciter voltage available per pole.
    const double field_mean_turn = 2.0 * (L + 0.6 * tau);
    const double volts_per_pole = c.exciter_voltage * (1.0 - c.exciter_reserve) / p;
    d.field_conductor_area = c.resistivity_ohm_m * field_mean_turn * d.full_load_field_mmf / volts_per_pole;
    const double delta_f = c.field_current_density_a_mm2 * 1e6;
    const double i_design = delta_f * d.field_conductor_area;
    d.field_turns_per_pole = static_cast<int>(std::ceil(d.full_load_field_mmf / i_design - 1e-12));
    if (d.field_turns_per_pole < 1) d.field_turns_per_pole = 1;
    d.field_current_fl = d.full_load_field_mmf / d.field_turns_per_pole;
    d.field_current_nl = d.no_load_field_mmf / d.field_turns_per_pole;
    const double coil_height = c.field_coil_height_ratio * tau;
    d.field_winding_depth =
        d.field_turns_per_pole * d.field_conductor_area / (c.field_fill_factor * coil_height);

    const double depth_per_at = 1.0 / (delta_f * c.field_fill_factor * coil_height);
    const auto mmf_grid = linear_grid(0.0, 1.25 * d.full_load_field_mmf, 26);
    std::vector<double> depth;
    depth.reserve(mmf_grid.size());
    for (double at : mmf_grid) depth.push_back(at * depth_per_at);
    d.field_winding_depth_curve =
        CurveSeries("field_winding_depth", "field MMF [At/pole]", "winding depth [m]", mmf_grid, depth);

    // Stator iron loss at rated flux.
    const double density = material.density();
    const double teeth_mass = p * teeth_net_area * d.slot_depth * density;
    const double core_mass = kPi * (D + 2.0 * d.slot_depth + d.core_depth) * d.core_depth * L * sf * density;
    d.stator_core_loss =
        teeth_mass * specific_core_loss(material, c.tooth_flux_density, spec.frequency) +
        core_mass * specific_core_loss(material, c.core_flux_density, spec.frequency);

    const auto b_grid = linear_grid(0.0, 2.0, static_cast<std::size_t>(c.core_loss_points) + 1);
    auto loss = map_grid(exec, b_grid, [&](double b) { return specific_core_loss(material, b, spec.frequency); });
    d.core_loss_curve = CurveSeries("core_loss", "flux density [T]", "specific core loss [W/kg]", b_grid, loss);

    const auto if_grid = linear_grid(0.0, c.occ_max_field_ratio * d.field_current_nl,
                                     static_cast<std::size_t>(c.occ_points));
    d.occ = open_circuit_characteristic(d, material, if_grid, exec);
    return d;
}

}  // namespace emcad::synchronous
