#include "emcad/dcmachine.hpp"

#include <cmath>
#include <cstdlib>

#include "emcad/error.hpp"
#include "emcad/units.hpp"

namespace emcad::dc {

void validate(const Spec& s) {
    if (!(s.power_kw > 0.0)) throw ValidationError("power_kw", "power_kw: must be > 0");
    if (!(s.voltage > 0.0)) throw ValidationError("voltage", "voltage: must be > 0");
    if (!(s.speed_rpm > 0.0)) throw ValidationError("speed_rpm", "speed_rpm: must be > 0");
    if (s.poles < 2 || s.poles % 2 != 0) throw ValidationError("poles", "poles: must be even and >= 2");
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
    pos(c.b_av_max, "b_av_max");
    pos(c.ac_min, "ac_min");
    pos(c.ac_max, "ac_max");
    pos(c.l_over_tau, "l_over_tau");
    pos(c.target_slot_pitch, "target_slot_pitch");
    if (c.max_conductors_per_slot < 2) {
        throw ValidationError("constants.max_conductors_per_slot",
                              "constants.max_conductors_per_slot: must be >= 2");
    }
}

int parallel_paths_for(Winding w, int poles) { return w == Winding::lap ? poles : 2; }

double armature_emf(double flux_per_pole, int conductors, double speed_rpm, int poles,
                    int parallel_paths) {
    if (!(flux_per_pole > 0.0) || conductors <= 0 || !(speed_rpm > 0.0) || poles <= 0 ||
        parallel_paths <= 0) {
        throw DomainError("armature_emf: all inputs must be > 0");
    }
    return flux_per_pole * conductors * speed_rpm * poles / (60.0 * parallel_paths);
}

Design design_dc(const Spec& spec, const Material& /*material*/, const Constants& c) {
    validate(spec);
    validate(c);
    if (c.b_av > c.b_av_max) {
        throw InfeasibleDesign("b_av <= b_av_max", "specific magnetic loading " + std::to_string(c.b_av) +
                                                       " T exceeds " + std::to_string(c.b_av_max));
    }
    if (c.ac < c.ac_min || c.ac > c.ac_max) {
        throw InfeasibleDesign("ac_min <= ac <= ac_max", "specific electric loading " + std::to_string(c.ac) +
                                                             " A/m outside limits");
    }

    const int p = spec.poles;
    Design d;
    d.loadings = {c.b_av, c.ac};
    d.output_coefficient = kPi * kPi * c.b_av * c.ac * 1e-3;
    const double n = spec.speed_rpm / 60.0;
    d.d2l = spec.power_kw / (d.output_coefficient * n);
    d.main = separate_main_dimensions(d.d2l, RatioPolicy{c.l_over_tau}, p);
    const double D = d.main.d;
    d.flux_per_pole = flux_per_pole_from_loading(p, c.b_av, D, d.main.l);
    d.parallel_paths = parallel_paths_for(spec.winding, p);
    const int a = d.parallel_paths;

    // Conductors from the EMF equation, nearest even count.
    d.emf_resolution = d.flux_per_pole * spec.speed_rpm * p / (60.0 * a);
    const double z_raw = spec.voltage / d.emf_resolution;
    long z = std::lround(z_raw / 2.0) * 2;
    if (z < 2) z = 2;
    d.armature_conductors = static_cast<int>(z);

    // Slots: an even conductors-per-slot dividing Z, slot count nearest the
    // target pitch. Zs = 2 always divides an even Z.
    const double slots_target = std::max(1.0, kPi * D / c.target_slot_pitch);
    int best_zs = 2;
    double best_err = std::abs(z / 2.0 - slots_target);
    for (int zs = 4; zs <= c.max_conductors_per_slot && zs <= z; zs += 2) {
        if (z % zs != 0) continue;
        const double err = std::abs(static_cast<double>(z / zs) - slots_target);
        if (err < best_err) {
            best_err = err;
            best_zs = zs;
        }
    }
    d.conductors_per_slot = best_zs;
    d.slots = static_cast<int>(z / best_zs);

    d.armature_current = spec.power_kw * 1000.0 / spec.voltage;
    d.conductor_current = d.armature_current / a;
    d.total_ampere_conductors = d.conductor_current * d.armature_conductors;
    d.ac_actual = specific_electric_loading(d.total_ampere_conductors, D);
    if (d.ac_actual < c.ac_min || d.ac_actual > c.ac_max) {
        throw InfeasibleDesign("ac_min <= ac <= ac_max",
                               "electric loading after conductor rounding " + std::to_string(d.ac_actual) +
                                   " A/m outside [" + std::to_string(c.ac_min) + ", " +
                                   std::to_string(c.ac_max) + "]");
    }
    d.emf_check = armature_emf(d.flux_per_pole, d.armature_conductors, spec.speed_rpm, p, a);
    return d;
}

}  // namespace emcad::dc
