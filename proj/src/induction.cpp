#include "emcad/induction.hpp"

#include <cmath>
#include <cstdlib>

#include "emcad/error.hpp"
#include "emcad/units.hpp"

namespace emcad::induction {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

int round_to_even(double v) {
    const long n = std::lround(v / 2.0) * 2;
    return static_cast<int>(std::max(2L, n));
}

}  // namespace

void validate(const Spec& s) {
    if (!(s.power_kw > 0.0)) throw ValidationError("power_kw", "power_kw: must be > 0");
    if (!(s.line_voltage > 0.0)) throw ValidationError("line_voltage", "line_voltage: must be > 0");
    if (!(s.frequency > 0.0)) throw ValidationError("frequency", "frequency: must be > 0");
    if (s.phases != 1 && s.phases != 3) throw ValidationError("phases", "phases: must be 1 or 3");
    if (s.poles < 2 || s.poles % 2 != 0) {
        throw ValidationError("poles", "poles: must be even and >= 2");
    }
    if (!(s.assumed_efficiency > 0.0 && s.assumed_efficiency < 1.0)) {
        throw ValidationError("assumed_efficiency", "assumed_efficiency: must be in (0, 1)");
    }
    if (!(s.assumed_pf > 0.0 && s.assumed_pf < 1.0)) {
        throw ValidationError("assumed_pf", "assumed_pf: must be in (0, 1)");
    }
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
    pos(c.b_av, "b_av");
    pos(c.ac, "ac");
    pos(c.b_av_min, "b_av_min");
    pos(c.b_av_max, "b_av_max");
    pos(c.ac_min, "ac_min");
    pos(c.ac_max, "ac_max");
    pos(c.c0_factor, "c0_factor");
    pos(c.single_phase_derating, "single_phase_derating");
    pos(c.l_over_tau, "l_over_tau");
    pos(c.air_gap_coeff_mm, "air_gap_coeff_mm");
    pos(c.stator_current_density_a_mm2, "stator_current_density_a_mm2");
    pos(c.bar_current_density_a_mm2, "bar_current_density_a_mm2");
    pos(c.ring_current_density_a_mm2, "ring_current_density_a_mm2");
    pos(c.stator_resistivity_ohm_m, "stator_resistivity_ohm_m");
    pos(c.rotor_resistivity_ohm_m, "rotor_resistivity_ohm_m");
    pos(c.leakage_permeance, "leakage_permeance");
    pos(c.x2_over_x1, "x2_over_x1");
    if (c.air_gap_base_mm < 0.0) {
        throw ValidationError("constants.air_gap_base_mm", "constants.air_gap_base_mm: must be >= 0");
    }
    if (c.slots_per_pole_per_phase < 1 || c.single_phase_slots_per_pole < 1) {
        throw ValidationError("constants.slots_per_pole_per_phase",
                              "constants: slots per pole must be >= 1");
    }
    if (c.rotor_slot_offset < 1) {
        throw ValidationError("constants.rotor_slot_offset", "constants.rotor_slot_offset: must be >= 1");
    }
    if (c.torque_grid_points < 2) {
        throw ValidationError("constants.torque_grid_points", "constants.torque_grid_points: must be >= 2");
    }
}

SlipResult slip(double frequency, int poles, double rotor_speed_rpm) {
    const double n_sync = synchronous_speed_rpm(frequency, poles);
    if (rotor_speed_rpm < 0.0) throw DomainError("slip: rotor speed must be >= 0");
    if (rotor_speed_rpm > n_sync) {
        throw DomainError("slip: rotor faster than synchronous speed (generating); only motoring is supported");
    }
    return {n_sync, (n_sync - rotor_speed_rpm) / n_sync};
}

double torque_at_slip(const TorqueSlipInputs& in, double s) {
    if (!(s > 0.0 && s <= 1.0)) throw DomainError("torque_at_slip: slip must be in (0, 1]");
    const auto& c = in.circuit;
    const double omega_s = 4.0 * kPi * in.frequency / in.poles;  // mechanical rad/s
    const double r2s = c.r2 / s;
    const double x = c.x1 + c.x2;
    return (in.phases / omega_s) * in.v_phase * in.v_phase * r2s /
           ((c.r1 + r2s) * (c.r1 + r2s) + x * x);
}

CurveSeries torque_slip_curve(const TorqueSlipInputs& in, std::span<const double> s_grid,
                              Execution exec) {
    const auto& c = in.circuit;
    if (!(c.r2 > 0.0) || c.r1 < 0.0 || c.x1 < 0.0 || c.x2 < 0.0) {
        throw DomainError("torque_slip_curve: impedances must be >= 0 with r2 > 0");
    }
    if (!(in.v_phase > 0.0) || !(in.frequency > 0.0) || in.phases < 1) {
        throw DomainError("torque_slip_curve: voltage, frequency and phases must be > 0");
    }
    require_even_poles(in.poles, "torque_slip_curve");
    for (double s : s_grid) {
        if (s == 0.0) throw DomainError("torque_slip_curve: s = 0 is excluded (pole of r2/s)");
        if (!(s > 0.0 && s <= 1.0)) throw DomainError("torque_slip_curve: slip grid must lie in (0, 1]");
    }
    auto ys = map_grid(exec, s_grid, [&](double s) { return torque_at_slip(in, s); });
    return CurveSeries("torque_slip", "slip [-]", "torque [N·m]",
                       std::vector<double>(s_grid.begin(), s_grid.end()), ys);
}

double peak_torque_slip(const EquivalentCircuit& c) {
    const double x = c.x1 + c.x2;
    return c.r2 / std::sqrt(c.r1 * c.r1 + x * x);
}

bool slot_combination_ok(int s, int sr, int poles) {
    const int diff = std::abs(s - sr);
    return diff != 0 && diff != 1 && diff != 2 && diff != poles;
}

Design design_induction(const Spec& spec, const Material& /*material*/, const Constants& c,
                        Execution exec) {
    validate(spec);
    validate(c);
    if (c.b_av < c.b_av_min || c.b_av > c.b_av_max) {
        throw InfeasibleDesign("b_av_min <= b_av <= b_av_max",
                               "specific magnetic loading " + std::to_string(c.b_av) +
                                   " T outside [" + std::to_string(c.b_av_min) + ", " +
                                   std::to_string(c.b_av_max) + "]");
    }
    if (c.ac < c.ac_min || c.ac > c.ac_max) {
        throw InfeasibleDesign("ac_min <= ac <= ac_max",
                               "specific electric loading " + std::to_string(c.ac) + " A/m outside [" +
                                   std::to_string(c.ac_min) + ", " + std::to_string(c.ac_max) + "]");
    }

    const int m = spec.phases;
    const int p = spec.poles;
    const double f = spec.frequency;
    const double kw = spec.winding_factor;

    Design d;
    d.loadings = {c.b_av, c.ac};
    d.kva_input = spec.power_kw / (spec.assumed_efficiency * spec.assumed_pf);
    d.synchronous_speed_rpm = synchronous_speed_rpm(f, p);
    const double ns = d.synchronous_speed_rpm / 60.0;
    d.output_coefficient = c.c0_factor * kw * c.b_av * c.ac * 1e-3;
    if (m == 1) d.output_coefficient *= c.single_phase_derating;
    d.d2l = d.kva_input / (d.output_coefficient * ns);
    d.main = separate_main_dimensions(d.d2l, RatioPolicy{c.l_over_tau}, p);
    const double D = d.main.d;
    const double L = d.main.l;
    d.flux_per_pole = flux_per_pole_from_loading(p, c.b_av, D, L);

    // Stator winding.
    d.phase_voltage = (m == 3 && c.stator_connection == StatorConnection::star)
                          ? spec.line_voltage / kSqrt3
                          : spec.line_voltage;
    d.phase_current = d.kva_input * 1000.0 / (m * d.phase_voltage);
    const double turns_raw = d.phase_voltage / (4.44 * f * d.flux_per_pole * kw);
    d.stator_slots = (m == 3 ? c.slots_per_pole_per_phase * m : c.single_phase_slots_per_pole) * p;
    d.conductors_per_slot = round_to_even(2.0 * m * turns_raw / d.stator_slots);
    const int total_conductors = d.conductors_per_slot * d.stator_slots;
    d.stator_turns_per_phase = total_conductors / (2 * m);
    d.total_ampere_conductors = d.phase_current * total_conductors;
    d.ac_actual = specific_electric_loading(d.total_ampere_conductors, D);
    if (d.ac_actual < c.ac_min || d.ac_actual > c.ac_max) {
        throw InfeasibleDesign("ac_min <= ac <= ac_max",
                               "electric loading after turn rounding " + std::to_string(d.ac_actual) +
                                   " A/m outside [" + std::to_string(c.ac_min) + ", " +
                                   std::to_string(c.ac_max) + "]");
    }
    d.conductor_area = d.phase_current / (c.stator_current_density_a_mm2 * 1e6);

    d.air_gap = (c.air_gap_base_mm + c.air_gap_coeff_mm * std::sqrt(D * L)) * 1e-3;

    // Rotor bars: first combination passing the cogging/crawling guard.
    const int S = d.stator_slots;
    d.rotor_bars = 0;
    for (int off = c.rotor_slot_offset; off <= S / 2 && d.rotor_bars == 0; ++off) {
        for (int cand : {S - off, S + off}) {
            if (cand >= 2 && slot_combination_ok(S, cand, p)) {
                d.rotor_bars = cand;
                break;
            }
        }
    }
    if (d.rotor_bars == 0) {
        throw InfeasibleDesign("rotor slot combination",
                               "no rotor bar count within S/2 of " + std::to_string(S) +
                                   " stator slots passes the combination guard");
    }
    const int T = d.stator_turns_per_phase;
    const int Sr = d.rotor_bars;
    d.bar_current = 2.0 * m * kw * T * d.phase_current * spec.assumed_pf / Sr;
    d.bar_area = d.bar_current / (c.bar_current_density_a_mm2 * 1e6);
    d.end_ring_current = Sr * d.bar_current / (kPi * p);
    d.end_ring_area = d.end_ring_current / (c.ring_current_density_a_mm2 * 1e6);

    // Equivalent circuit.
    const double tau = kPi * D / p;
    const double mean_turn = 2.0 * L + 2.3 * tau + 0.24;
    auto& ec = d.equivalent_circuit;
    ec.r1 = c.stator_resistivity_ohm_m * T * mean_turn / d.conductor_area;
    const double bar_length = L + 0.05;
    const double r_bar = c.rotor_resistivity_ohm_m * bar_length / d.bar_area;
    const double ring_diameter = D - 2.0 * d.air_gap;
    const double r_ring = c.rotor_resistivity_ohm_m * kPi * ring_diameter / d.end_ring_area;
    const double rotor_loss = Sr * d.bar_current * d.bar_current * r_bar +
                              2.0 * d.end_ring_current * d.end_ring_current * r_ring;
    const double i2 = d.phase_current * spec.assumed_pf;
    ec.r2 = rotor_loss / (m * i2 * i2);
    const double q = static_cast<double>(S) / (m * p);
    ec.x1 = 4.0 * kPi * f * kMu0 * T * T * L * c.leakage_permeance / (p * q);
    ec.x2 = ec.x1 * c.x2_over_x1;

    const TorqueSlipInputs in{ec, d.phase_voltage, f, p, m};
    const auto s_grid = linear_grid(1.0 / c.torque_grid_points, 1.0,
                                    static_cast<std::size_t>(c.torque_grid_points));
    d.torque_slip = torque_slip_curve(in, s_grid, exec);
    const double omega_s = 4.0 * kPi * f / p;
    std::vector<double> sync_watts;
    sync_watts.reserve(s_grid.size());
    for (const auto& pt : d.torque_slip.points()) sync_watts.push_back(pt.y * omega_s);
    d.torque_slip_sync_watts = CurveSeries("torque_slip_sync_watts", "slip [-]",
                                           "torque [synchronous W]", s_grid, sync_watts);
    d.peak_torque_slip = peak_torque_slip(ec);
    d.peak_torque = torque_at_slip(in, std::min(1.0, d.peak_torque_slip));
    return d;
}

}  // namespace emcad::induction
