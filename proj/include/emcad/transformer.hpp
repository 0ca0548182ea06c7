#pragma once

#include <optional>
#include <string>

#include "emcad/curve.hpp"
#include "emcad/materials.hpp"

namespace emcad::transformer {

enum class CoreForm { core, shell };
enum class Connection { star, delta, single };

struct Spec {
    double kva = 0.0;
    double hv_voltage = 0.0;  // line, V
    double lv_voltage = 0.0;  // line, V
    double frequency = 50.0;
    int phases = 3;
    CoreForm core_form = CoreForm::core;
    Connection connection = Connection::star;
    std::string material;

    bool operator==(const Spec&) const = default;
};

// Throws ValidationError naming the offending field.
void validate(const Spec& spec);

// EMF-per-turn factors K in Et = K·√Q.
struct EmfFactors {
    double single_core = 0.80;
    double single_shell = 1.10;
    double three_core = 0.45;
    double three_shell = 1.30;
    bool operator==(const EmfFactors&) const = default;
};

struct Constants {
    EmfFactors emf_factor;
    double flux_density_core = 1.3;   // T
    double flux_density_shell = 1.1;  // T
    double current_density_a_mm2 = 2.3;
    // Window space factor; when unset, 10/(30 + kV_hv).
    std::optional<double> window_space_factor;
    double window_height_to_width_core = 3.0;
    double window_height_to_width_shell = 3.0;
    // Radial gap between LV and HV windings as a fraction of the winding space.
    double interwinding_gap_fraction = 0.1;
    double resistivity_ohm_m = 2.1e-8;
    double report_pf = 0.8;
    int efficiency_grid_points = 125;

    bool operator==(const Constants&) const = default;
};

// Throws ValidationError("constants...", ...) for out-of-range constants.
void validate(const Constants& c);

struct Design {
    double rated_kva = 0.0;
    double emf_per_turn_seed = 0.0;  // K·√Q, V
    double emf_per_turn = 0.0;       // after LV turn rounding, V
    double flux_max = 0.0;      // Wb
    double core_area = 0.0;     // m², gross
    double flux_density = 0.0;  // T
    int hv_turns = 0;           // per phase
    int lv_turns = 0;
    double hv_phase_voltage = 0.0;
    double lv_phase_voltage = 0.0;
    double hv_phase_current = 0.0;
    double lv_phase_current = 0.0;
    double window_space_factor = 0.0;
    double window_area = 0.0;    // m²
    double window_height = 0.0;  // m
    double window_width = 0.0;   // m
    double hv_conductor_area = 0.0;  // m²
    double lv_conductor_area = 0.0;
    double core_mass = 0.0;  // kg
    double core_loss = 0.0;  // W
    double copper_loss_fl = 0.0;  // W
    double r_equivalent_hv = 0.0;  // Ω per phase, referred to HV
    double x_equivalent_hv = 0.0;
    double no_load_current_pct = 0.0;
    double max_efficiency_load = 0.0;  // per unit of rated load
    double efficiency_fl = 0.0;        // %, at report_pf
    double regulation_fl = 0.0;        // %, at report_pf lagging
    CurveSeries efficiency_curve;      // load fraction → %

    bool operator==(const Design&) const = default;
};

Design design_transformer(const Spec& spec, const Material& material, const Constants& constants);

struct Performance {
    double efficiency = 0.0;  // %
    double regulation = 0.0;  // %
    double max_efficiency_load = 0.0;
};

// Efficiency and regulation at `load_fraction` of rated kVA and power
// factor `pf` (lagging). load_fraction ∈ [0, 1.25], pf ∈ (0, 1].
Performance transformer_performance(const Design& design, double load_fraction, double pf);

// η(x) = x·Q·pf / (x·Q·pf + P_core + x²·P_cu) in percent; 0 at x = 0.
double efficiency_at(double kva, double load_fraction, double pf, double core_loss,
                     double copper_loss_fl);

// Et = K·√Q.
double emf_per_turn(double k, double kva);
// φm = Et / (4.44·f).
double peak_flux(double emf_per_turn, double frequency);

double per_phase_voltage(double line_voltage, Connection c);

}  // namespace emcad::transformer
