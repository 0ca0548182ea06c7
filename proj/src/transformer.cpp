#include "emcad/transformer.hpp"

#include <cmath>

#include "emcad/error.hpp"
#include "emcad/units.hpp"

namespace emcad::transformer {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

double phase_current(double kva, int phases, double phase_voltage) {
    return kva * 1000.0 / (phases * phase_voltage);
}

}  // namespace

double emf_per_turn(double k, double kva) {
    if (!(k > 0.0) || !(kva > 0.0)) throw DomainError("emf_per_turn: K and Q must be > 0");
    return k * std::sqrt(kva);
}

double peak_flux(double emf_per_turn, double frequency) {
    if (!(emf_per_turn > 0.0) || !(frequency > 0.0)) {
        throw DomainError("peak_flux: EMF per turn and frequency must be > 0");
    }
    return emf_per_turn / (4.44 * frequency);
}

double per_phase_voltage(double line_voltage, Connection c) {
    return c == Connection::star ? line_voltage / kSqrt3 : line_voltage;
}

void validate(const Spec& s) {
    if (!(s.kva > 0.0)) throw ValidationError("kva", "kva: must be > 0");
    if (!(s.hv_voltage > 0.0)) throw ValidationError("hv_voltage", "hv_voltage: must be > 0");
    if (!(s.lv_voltage > 0.0)) throw ValidationError("lv_voltage", "lv_voltage: must be > 0");
    if (!(s.frequency > 0.0)) throw ValidationError("frequency", "frequency: must be > 0");
    if (s.phases != 1 && s.phases != 3) {
        throw ValidationError("phases", "phases: must be 1 or 3");
    }
    if (s.phases == 3 && s.connection == Connection::single) {
        throw ValidationError("connection", "connection: three-phase requires star or delta");
    }
    if (s.phases == 1 && s.connection != Connection::single) {
        throw ValidationError("connection", "connection: single-phase requires 'single'");
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
    pos(c.emf_factor.single_core, "emf_factor.single_core");
    pos(c.emf_factor.single_shell, "emf_factor.single_shell");
    pos(c.emf_factor.three_core, "emf_factor.three_core");
    pos(c.emf_factor.three_shell, "emf_factor.three_shell");
    pos(c.flux_density_core, "flux_density_core");
    pos(c.flux_density_shell, "flux_density_shell");
    pos(c.current_density_a_mm2, "current_density_a_mm2");
    pos(c.window_height_to_width_core, "window_height_to_width_core");
    pos(c.window_height_to_width_shell, "window_height_to_width_shell");
    pos(c.resistivity_ohm_m, "resistivity_ohm_m");
    if (c.window_space_factor && !(*c.window_space_factor > 0.0 && *c.window_space_factor < 1.0)) {
        throw ValidationError("constants.window_space_factor",
                              "constants.window_space_factor: must be in (0, 1)");
    }
    if (!(c.interwinding_gap_fraction >= 0.0 && c.interwinding_gap_fraction < 1.0)) {
        throw ValidationError("constants.interwinding_gap_fraction",
                              "constants.interwinding_gap_fraction: must be in [0, 1)");
    }
    if (!(c.report_pf > 0.0 && c.report_pf <= 1.0)) {
        throw ValidationError("constants.report_pf", "constants.report_pf: must be in (0, 1]");
    }
    if (c.efficiency_grid_points < 2) {
        throw ValidationError("constants.efficiency_grid_points",
                              "constants.efficiency_grid_points: must be >= 2");
    }
}

double efficiency_at(double kva, double load_fraction, double pf, double core_loss,
                     double copper_loss_fl) {
    const double out = load_fraction * kva * 1000.0 * pf;
    if (out == 0.0) return 0.0;
    return 100.0 * out / (out + core_loss + load_fraction * load_fraction * copper_loss_fl);
}

Design design_transformer(const Spec& spec, const Material& material, const Constants& c) {
    validate(spec);
    validate(c);

    const bool shell = spec.core_form == CoreForm::shell;
    const bool three = spec.phases == 3;
    const double k = three ? (shell ? c.emf_factor.three_shell : c.emf_factor.three_core)
                           : (shell ? c.emf_factor.single_shell : c.emf_factor.single_core);
    const double b_design = shell ? c.flux_density_shell : c.flux_density_core;
    if (b_design > material.saturation_knee()) {
        throw InfeasibleDesign("flux_density <= saturation_knee",
                               "design flux density " + std::to_string(b_design) +
                                   " T exceeds the saturation knee of '" + material.name() +
                                   "' (" + std::to_string(material.saturation_knee()) + " T)");
    }
    const double f = spec.frequency;
    const double delta = c.current_density_a_mm2 * 1e6;  // A/m²
    const double kw = c.window_space_factor.value_or(10.0 / (30.0 + spec.hv_voltage / 1000.0));
    if (!(kw > 0.0 && kw < 1.0)) {
        throw ValidationError("constants.window_space_factor",
                              "window space factor must be in (0, 1)");
    }

    Design d;
    d.rated_kva = spec.kva;
    d.window_space_factor = kw;

    // EMF per turn and core section.
    const double et_design = emf_per_turn(k, spec.kva);
    const double flux_design = peak_flux(et_design, f);
    d.emf_per_turn_seed = et_design;
    const double net_area = flux_design / b_design;
    d.core_area = net_area / material.stacking_factor();

    // Window from the output equation.
    const double c_out = three ? 3.33 : 2.22;
    d.window_area = spec.kva / (c_out * f * b_design * kw * delta * net_area * 1e-3);
    const double hw_ratio = shell ? c.window_height_to_width_shell : c.window_height_to_width_core;
    d.window_height = std::sqrt(d.window_area * hw_ratio);
    d.window_width = d.window_area / d.window_height;

    // Turns: LV rounded up, HV from the exact ratio.
    d.lv_phase_voltage = per_phase_voltage(spec.lv_voltage, spec.connection);
    d.hv_phase_voltage = per_phase_voltage(spec.hv_voltage, spec.connection);
    d.lv_turns = static_cast<int>(std::ceil(d.lv_phase_voltage / et_design - 1e-12));
    if (d.lv_turns < 1) d.lv_turns = 1;
    d.hv_turns = static_cast<int>(
        std::lround(d.lv_turns * d.hv_phase_voltage / d.lv_phase_voltage));
    if (d.hv_turns < 1) d.hv_turns = 1;

    // Flux follows the quantized LV turns.
    d.flux_max = d.lv_phase_voltage / (4.44 * f * d.lv_turns);
    d.emf_per_turn = 4.44 * f * d.flux_max;
    d.flux_density = d.flux_max / net_area;

    d.lv_phase_current = phase_current(spec.kva, spec.phases, d.lv_phase_voltage);
    d.hv_phase_current = phase_current(spec.kva, spec.phases, d.hv_phase_voltage);
    d.lv_conductor_area = d.lv_phase_current / delta;
    d.hv_conductor_area = d.hv_phase_current / delta;

    // Core mass from the limb/yoke layout. `loop` is the mean magnetic path
    // of one phase loop.
    const double a = std::sqrt(d.core_area);
    const double hw = d.window_height;
    const double ww = d.window_width;
    double path_total = 0.0;
    if (!shell) {
        path_total = three ? 3.0 * hw + 2.0 * (2.0 * ww + 3.0 * a) : 2.0 * hw + 2.0 * ww + 4.0 * a;
    } else {
        path_total = (three ? 3.0 : 1.0) * (2.0 * hw + 2.0 * ww + 2.0 * a);
    }
    d.core_mass = net_area * path_total * material.density();
    d.core_loss = d.core_mass * specific_core_loss(material, d.flux_density, f);

    // Windings: core-type windows are shared by two limbs.
    const double space = shell ? ww : 0.5 * ww;
    const double gap = c.interwinding_gap_fraction * space;
    const double build = 0.5 * (space - gap);
    const double mtl_lv = 4.0 * a + 2.0 * kPi * (0.5 * build);
    const double mtl_hv = 4.0 * a + 2.0 * kPi * (build + gap + 0.5 * build);
    const double rho = c.resistivity_ohm_m;
    const double r_lv = rho * d.lv_turns * mtl_lv / d.lv_conductor_area;
    const double r_hv = rho * d.hv_turns * mtl_hv / d.hv_conductor_area;
    d.copper_loss_fl = spec.phases * (d.lv_phase_current * d.lv_phase_current * r_lv +
                                      d.hv_phase_current * d.hv_phase_current * r_hv);
    const double ratio = static_cast<double>(d.hv_turns) / d.lv_turns;
    d.r_equivalent_hv = r_hv + r_lv * ratio * ratio;
    const double mtl = 0.5 * (mtl_lv + mtl_hv);
    d.x_equivalent_hv = 2.0 * kPi * f * kMu0 * d.hv_turns * d.hv_turns * (mtl / hw) *
                        (gap + 2.0 * build / 3.0);

    // No-load current: magnetizing plus loss component, on the LV side.
    const double path_per_phase = path_total / spec.phases;
    const double i_mag = h_at(material, d.flux_density) * path_per_phase /
                         (std::sqrt(2.0) * d.lv_turns);
    const double i_loss = d.core_loss / (spec.phases * d.lv_phase_voltage);
    d.no_load_current_pct = 100.0 * std::hypot(i_mag, i_loss) / d.lv_phase_current;

    const auto full = transformer_performance(d, 1.0, c.report_pf);
    d.efficiency_fl = full.efficiency;
    d.regulation_fl = full.regulation;
    d.max_efficiency_load = full.max_efficiency_load;

    const auto xs = linear_grid(1.25 / c.efficiency_grid_points, 1.25,
                                static_cast<std::size_t>(c.efficiency_grid_points));
    std::vector<double> ys;
    ys.reserve(xs.size());
    for (double x : xs) {
        ys.push_back(efficiency_at(spec.kva, x, c.report_pf, d.core_loss, d.copper_loss_fl));
    }
    d.efficiency_curve = CurveSeries("efficiency", "load fraction [p.u.]", "efficiency [%]", xs, ys);
    return d;
}

Performance transformer_performance(const Design& d, double load_fraction, double pf) {
    if (!(load_fraction >= 0.0 && load_fraction <= 1.25)) {
        throw DomainError("load fraction must be in [0, 1.25]");
    }
    if (!(pf > 0.0 && pf <= 1.0)) throw DomainError("power factor must be in (0, 1]");
    Performance p;
    p.efficiency = efficiency_at(d.rated_kva, load_fraction, pf, d.core_loss, d.copper_loss_fl);
    const double i = load_fraction * d.hv_phase_current;
    const double sin_phi = std::sqrt(std::max(0.0, 1.0 - pf * pf));
    p.regulation =
        100.0 * (i * d.r_equivalent_hv * pf + i * d.x_equivalent_hv * sin_phi) / d.hv_phase_voltage;
    p.max_efficiency_load = d.copper_loss_fl > 0.0 ? std::sqrt(d.core_loss / d.copper_loss_fl) : 0.0;
    return p;
}

}  // namespace emcad::transformer
