#include "emcad/srm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "emcad/error.hpp"
#include "emcad/sizing.hpp"
#include "emcad/units.hpp"

namespace emcad::srm {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Small margin kept inside the strict inequality β_s + β_r < 2π/n_r.
constexpr double kArcMargin = 1e-6;

}  // namespace

const char* recipe_name(PathRecipe r) {
    switch (r) {
        case PathRecipe::face_to_slot_bottom: return "face_to_slot_bottom";
        case PathRecipe::face_to_pole_side: return "face_to_pole_side";
        case PathRecipe::side_to_pole_tip: return "side_to_pole_tip";
        case PathRecipe::side_to_pole_side: return "side_to_pole_side";
        case PathRecipe::interpolar_leakage: return "interpolar_leakage";
        case PathRecipe::end_fringe: return "end_fringe";
        case PathRecipe::end_winding: return "end_winding";
    }
    return "unknown";
}

std::vector<PathEntry> default_path_table() {
    return {
        {PathRecipe::face_to_slot_bottom, 1.0}, {PathRecipe::face_to_pole_side, 1.0},
        {PathRecipe::side_to_pole_tip, 1.0},    {PathRecipe::side_to_pole_side, 0.5},
        {PathRecipe::interpolar_leakage, 0.5},  {PathRecipe::end_fringe, 0.25},
        {PathRecipe::end_winding, 0.25},
    };
}

void validate(const Spec& s) {
    if (!(s.target_value > 0.0)) throw ValidationError("target_value", "target_value: must be > 0");
    if (!(s.speed_rpm > 0.0)) throw ValidationError("speed_rpm", "speed_rpm: must be > 0");
    if (!(s.dc_voltage > 0.0)) throw ValidationError("dc_voltage", "dc_voltage: must be > 0");
    if (s.phases < 1) throw ValidationError("phases", "phases: must be >= 1");
    if (s.stator_poles < 2 || s.stator_poles % 2 != 0) {
        throw ValidationError("stator_poles", "stator_poles: must be even and >= 2");
    }
    if (s.rotor_poles < 2 || s.rotor_poles % 2 != 0) {
        throw ValidationError("rotor_poles", "rotor_poles: must be even and >= 2");
    }
    if (s.stator_poles <= s.rotor_poles) {
        throw ValidationError("rotor_poles", "rotor_poles: must be fewer than stator_poles");
    }
    if (s.stator_poles % s.phases != 0) {
        throw ValidationError("phases", "phases: must divide stator_poles");
    }
    if (!(s.beta_s > 0.0)) throw ValidationError("beta_s", "beta_s: must be > 0");
    if (!(s.beta_r > 0.0)) throw ValidationError("beta_r", "beta_r: must be > 0");
    if (!(s.air_gap > 0.0)) throw ValidationError("air_gap", "air_gap: must be > 0");
    if (!(s.peak_current > 0.0)) throw ValidationError("peak_current", "peak_current: must be > 0");
    if (s.material.empty()) throw ValidationError("material", "material: must be named");
}

bool feasible_arcs(double beta_s, double beta_r, int phases, int rotor_poles) {
    return beta_s <= beta_r && beta_s >= 2.0 * kPi / (phases * rotor_poles) &&
           beta_s + beta_r < 2.0 * kPi / rotor_poles;
}

void check_feasibility(const Spec& s) {
    if (!(s.beta_s <= s.beta_r)) {
        throw InfeasibleDesign("beta_s <= beta_r", "pole arcs violate beta_s <= beta_r (beta_s = " +
                                                       fmt(s.beta_s) + ", beta_r = " + fmt(s.beta_r) + " rad)");
    }
    const double min_s = 2.0 * kPi / (s.phases * s.rotor_poles);
    if (!(s.beta_s >= min_s)) {
        throw InfeasibleDesign("beta_s >= 2π/(m·n_r)",
                               "pole arcs violate beta_s >= 2π/(m·n_r) = " + fmt(min_s) +
                                   " rad (self-starting stroke coverage)");
    }
    const double max_sum = 2.0 * kPi / s.rotor_poles;
    if (!(s.beta_s + s.beta_r < max_sum)) {
        throw InfeasibleDesign("beta_s + beta_r < 2π/n_r",
                               "pole arcs violate beta_s + beta_r < 2π/n_r = " + fmt(max_sum) +
                                   " rad (poles would overlap at the unaligned position)");
    }
}

double target_torque(const Spec& s) {
    if (s.target_kind == TargetKind::torque) return s.target_value;
    const double omega = 2.0 * kPi * s.speed_rpm / 60.0;
    return s.target_value * 1000.0 / omega;
}

void validate(const Constants& c) {
    auto pos = [](double v, const char* name) {
        if (!(v > 0.0)) {
            throw ValidationError(std::string("constants.") + name,
                                  std::string("constants.") + name + ": must be > 0");
        }
    };
    pos(c.efficiency, "efficiency");
    pos(c.duty, "duty");
    pos(c.k2, "k2");
    pos(c.magnetic_loading, "magnetic_loading");
    pos(c.electric_loading, "electric_loading");
    pos(c.l_over_tau, "l_over_tau");
    pos(c.rotor_pole_height_ratio, "rotor_pole_height_ratio");
    pos(c.pole_flux_density, "pole_flux_density");
    pos(c.current_density_a_mm2, "current_density_a_mm2");
    pos(c.max_pole_height_to_bore, "max_pole_height_to_bore");
    pos(c.refinement_step, "refinement_step");
    if (c.stator_back_iron_factor < 1.0) {
        throw ValidationError("constants.stator_back_iron_factor",
                              "constants.stator_back_iron_factor: must be >= 1 (flux continuity)");
    }
    if (c.rotor_back_iron_factor < 1.0) {
        throw ValidationError("constants.rotor_back_iron_factor",
                              "constants.rotor_back_iron_factor: must be >= 1");
    }
    if (!(c.fill_factor > 0.0 && c.fill_factor < 1.0)) {
        throw ValidationError("constants.fill_factor", "constants.fill_factor: must be in (0, 1)");
    }
    if (!(c.torque_tolerance > 0.0 && c.torque_tolerance < 1.0)) {
        throw ValidationError("constants.torque_tolerance", "constants.torque_tolerance: must be in (0, 1)");
    }
    if (c.profile_points < 5 || c.profile_points % 2 == 0) {
        throw ValidationError("constants.profile_points",
                              "constants.profile_points: must be odd and >= 5 (aligned angle on the grid)");
    }
    if (c.flux_paths.empty()) {
        throw ValidationError("constants.flux_paths", "constants.flux_paths: need at least one unaligned path");
    }
    for (std::size_t i = 0; i < c.flux_paths.size(); ++i) {
        const double f = c.flux_paths[i].enclosure_fraction;
        if (!(f >= 0.0 && f <= 1.0)) {
            const auto p = "constants.flux_paths[" + std::to_string(i) + "].enclosure_fraction";
            throw ValidationError(p, p + ": must be in [0, 1]");
        }
    }
}

Geometry size_srm(const Spec& spec, const Material& material, const Constants& c) {
    validate(spec);
    validate(c);
    check_feasibility(spec);

    Geometry g;
    g.phases = spec.phases;
    g.stator_poles = spec.stator_poles;
    g.rotor_poles = spec.rotor_poles;
    g.beta_s = spec.beta_s;
    g.beta_r = spec.beta_r;
    g.air_gap = spec.air_gap;

    const double omega = 2.0 * kPi * spec.speed_rpm / 60.0;
    const double power_w = target_torque(spec) * omega;
    const double c0 = c.efficiency * c.duty * (kPi * kPi / 120.0) * c.k2 * c.magnetic_loading *
                      c.electric_loading;  // W per m³·rpm
    const double d2l = power_w / (c0 * spec.speed_rpm);
    const auto dims = separate_main_dimensions(d2l, RatioPolicy{c.l_over_tau}, spec.stator_poles);
    g.bore_diameter = dims.d;
    g.stack_length = dims.l;
    const double D = dims.d;
    const double L = dims.l;
    if (!(2.0 * spec.air_gap < 0.1 * D)) {
        throw InfeasibleDesign("air_gap < 0.05·D", "air gap " + fmt(spec.air_gap) +
                                                        " m is too large for bore " + fmt(D) + " m");
    }

    g.stator_pole_width = D * std::sin(0.5 * spec.beta_s);
    g.rotor_pole_width = (D - 2.0 * spec.air_gap) * std::sin(0.5 * spec.beta_r);
    g.stator_back_iron = c.stator_back_iron_factor * 0.5 * g.stator_pole_width;
    g.rotor_back_iron = c.rotor_back_iron_factor * 0.5 * g.stator_pole_width;

    // Turns from the flux linkage V·(β_s/ω) carried at the pole flux density,
    // rounded up to a whole number per pole.
    const int poles_per_phase = spec.stator_poles / spec.phases;
    const double pole_area = g.stator_pole_width * L * material.stacking_factor();
    const double linkage = spec.dc_voltage * spec.beta_s / omega;
    const double turns_raw = linkage / (c.pole_flux_density * pole_area);
    const int per_pole = std::max(1, static_cast<int>(std::ceil(turns_raw / poles_per_phase - 1e-12)));
    g.turns_per_phase = per_pole * poles_per_phase;

    // Winding window between adjacent stator poles: two coil sides.
    const double i_rms = spec.peak_current / std::sqrt(static_cast<double>(spec.phases));
    const double copper = 2.0 * per_pole * i_rms / (c.current_density_a_mm2 * 1e6);
    const double window = copper / c.fill_factor;
    const double qa = kPi / spec.stator_poles;
    const double qb = kPi * D / spec.stator_poles - g.stator_pole_width;
    if (!(qb > 0.0)) {
        throw InfeasibleDesign("stator slot width > 0",
                               "stator poles leave no winding window at the bore; increase the bore "
                               "diameter or reduce beta_s");
    }
    g.stator_pole_height = (-qb + std::sqrt(qb * qb + 4.0 * qa * window)) / (2.0 * qa);
    if (!(g.stator_pole_height <= c.max_pole_height_to_bore * D)) {
        throw InfeasibleDesign("stator_pole_height <= max_pole_height_to_bore·D",
                               "winding window needs a stator pole height of " + fmt(g.stator_pole_height) +
                                   " m; increase the bore diameter");
    }
    g.rotor_pole_height = c.rotor_pole_height_ratio * g.rotor_pole_width;
    g.shaft_diameter = D - 2.0 * spec.air_gap - 2.0 * g.rotor_pole_height - 2.0 * g.rotor_back_iron;
    if (!(g.shaft_diameter > 0.0)) {
        throw InfeasibleDesign("shaft_diameter > 0",
                               "rotor poles and back iron leave no room for a shaft; increase the bore diameter");
    }
    g.outer_diameter = D + 2.0 * (g.stator_pole_height + g.stator_back_iron);
    return g;
}

namespace {

void check_geometry(const Geometry& g) {
    if (!(g.bore_diameter > 0.0 && g.stack_length > 0.0 && g.stator_pole_height > 0.0 &&
          g.rotor_pole_height > 0.0 && g.stator_back_iron > 0.0 && g.rotor_back_iron > 0.0 &&
          g.stator_pole_width > 0.0 && g.rotor_pole_width > 0.0 && g.shaft_diameter > 0.0 &&
          g.air_gap > 0.0 && g.turns_per_phase > 0 && g.rotor_poles >= 2)) {
        throw DomainError("SRM geometry has non-positive dimensions");
    }
}

double stacked(const Geometry& g, double width, const Material& m) {
    return width * g.stack_length * m.stacking_factor();
}

double stator_yoke_length(const Geometry& g) {
    return kPi * 0.5 * (g.outer_diameter - g.stator_back_iron);
}

double rotor_yoke_length(const Geometry& g) {
    return kPi * 0.5 * (g.shaft_diameter + g.rotor_back_iron);
}

std::vector<CircuitSegment> aligned_segments(const Geometry& g, const Material& m) {
    const double gap_radius = 0.5 * g.bore_diameter - 0.5 * g.air_gap;
    const double gap_area = std::min(g.beta_s, g.beta_r) * gap_radius * g.stack_length;
    return {
        CircuitSegment::iron(2.0 * g.stator_pole_height, stacked(g, g.stator_pole_width, m), m),
        CircuitSegment::air(2.0 * g.air_gap, gap_area),
        CircuitSegment::iron(2.0 * g.rotor_pole_height, stacked(g, g.rotor_pole_width, m), m),
        CircuitSegment::iron(rotor_yoke_length(g), 2.0 * stacked(g, g.rotor_back_iron, m), m),
        CircuitSegment::iron(stator_yoke_length(g), 2.0 * stacked(g, g.stator_back_iron, m), m),
    };
}

double peak_b(const std::vector<CircuitSegment>& segs, double flux) {
    double b = 0.0;
    for (const auto& s : segs) b = std::max(b, flux / s.area);
    return b;
}

}  // namespace

AlignedResult aligned_inductance(const Geometry& g, double current, const Material& m) {
    if (!(current > 0.0)) throw DomainError("aligned_inductance: current must be > 0");
    check_geometry(g);
    AlignedResult r;
    auto segs = aligned_segments(g, m);
    const double mmf = g.turns_per_phase * current;
    const auto sol = solve_series_magnetic_circuit(segs, mmf);
    r.la = g.turns_per_phase * sol.flux / current;
    r.main_path.index = 0;
    r.main_path.name = "aligned_main";
    r.main_path.enclosure_fraction = 1.0;
    r.main_path.solved_b = peak_b(segs, sol.flux);
    r.main_path.reluctance = mmf / sol.flux;
    r.main_path.inductance_contribution = r.la;
    r.main_path.segments = std::move(segs);
    return r;
}

double aligned_inductance_linear(const Geometry& g, const Material& m) {
    check_geometry(g);
    double rel = 0.0;
    for (const auto& s : aligned_segments(g, m)) rel += s.linear_reluctance();
    const double n = g.turns_per_phase;
    return n * n / rel;
}

UnalignedResult unaligned_inductance(const Geometry& g, const Material& m,
                                     std::span<const PathEntry> table, double current) {
    check_geometry(g);
    if (!(current >= 0.0)) throw DomainError("unaligned_inductance: current must be >= 0");
    const double r = 0.5 * g.bore_diameter;
    // Circumferential clearance between stator and rotor pole edges at the
    // unaligned position.
    const double clearance = r * (kPi / g.rotor_poles - 0.5 * g.beta_r - 0.5 * g.beta_s);
    if (!(clearance > 0.0)) {
        throw DomainError("unaligned_inductance: stator and rotor poles overlap at the unaligned position");
    }
    const double mu_r = m.initial_relative_permeability();
    const double L = g.stack_length;
    const double gap = g.air_gap;
    const double ws = g.stator_pole_width;
    const double hs = g.stator_pole_height;
    const double hr = g.rotor_pole_height;
    const double band = std::min(clearance, 0.5 * hs);

    auto stator_iron = [&](std::vector<CircuitSegment>& s, double pole_fraction) {
        s.push_back(CircuitSegment::linear(2.0 * pole_fraction * hs, stacked(g, ws, m), mu_r));
        s.push_back(CircuitSegment::linear(stator_yoke_length(g), 2.0 * stacked(g, g.stator_back_iron, m), mu_r));
    };
    auto rotor_iron = [&](std::vector<CircuitSegment>& s, double pole_fraction) {
        if (pole_fraction > 0.0) {
            s.push_back(CircuitSegment::linear(2.0 * pole_fraction * hr, stacked(g, g.rotor_pole_width, m), mu_r));
        }
        s.push_back(CircuitSegment::linear(rotor_yoke_length(g), 2.0 * stacked(g, g.rotor_back_iron, m), mu_r));
    };

    UnalignedResult out;
    const double n2 = static_cast<double>(g.turns_per_phase) * g.turns_per_phase;
    int index = 1;
    for (const auto& entry : table) {
        std::vector<CircuitSegment> s;
        // Air segments are doubled: the phase loop crosses the gap region at
        // both poles.
        switch (entry.recipe) {
            case PathRecipe::face_to_slot_bottom:
                s.push_back(CircuitSegment::air(2.0 * (gap + hr), 0.5 * ws * L));
                stator_iron(s, 1.0);
                rotor_iron(s, 0.0);
                break;
            case PathRecipe::face_to_pole_side:
                s.push_back(CircuitSegment::air(2.0 * (gap + 0.5 * kPi * (clearance + ws / 8.0)), 0.5 * ws * L));
                stator_iron(s, 1.0);
                rotor_iron(s, 0.5);
                break;
            case PathRecipe::side_to_pole_tip:
                s.push_back(CircuitSegment::air(2.0 * (gap + 0.5 * kPi * clearance), 2.0 * band * L));
                stator_iron(s, 0.5);
                rotor_iron(s, 1.0);
                break;
            case PathRecipe::side_to_pole_side:
                s.push_back(CircuitSegment::air(2.0 * (gap + clearance + 0.5 * kPi * band), 2.0 * band * L));
                stator_iron(s, 0.5);
                rotor_iron(s, 0.5);
                break;
            case PathRecipe::interpolar_leakage: {
                const double slot_mid = kPi * (g.bore_diameter + hs) / g.stator_poles - ws;
                if (!(slot_mid > 0.0)) {
                    throw DomainError("unaligned_inductance: stator poles overlap at mid-height");
                }
                s.push_back(CircuitSegment::air(2.0 * slot_mid, 2.0 * 0.5 * hs * L));
                stator_iron(s, 0.5);
                break;
            }
            case PathRecipe::end_fringe:
                s.push_back(CircuitSegment::air(2.0 * (gap + hr + 0.25 * kPi * ws), 2.0 * ws * 0.25 * ws));
                stator_iron(s, 1.0);
                rotor_iron(s, 0.0);
                break;
            case PathRecipe::end_winding:
                s.push_back(CircuitSegment::air(2.0 * 0.5 * kPi * hs, 2.0 * hs * 0.5 * ws));
                stator_iron(s, 1.0);
                break;
        }
        FluxPath fp;
        fp.index = index++;
        fp.name = recipe_name(entry.recipe);
        fp.enclosure_fraction = entry.enclosure_fraction;
        for (const auto& seg : s) fp.reluctance += seg.linear_reluctance();
        fp.inductance_contribution = entry.enclosure_fraction * n2 / fp.reluctance;
        const double flux = g.turns_per_phase * current / fp.reluctance;
        fp.solved_b = peak_b(s, flux);
        fp.segments = std::move(s);
        out.lu += fp.inductance_contribution;
        out.paths.push_back(std::move(fp));
    }
    return out;
}

ProfileRegions profile_regions(double beta_s, double beta_r, int rotor_poles) {
    if (rotor_poles < 2 || !(beta_s > 0.0) || !(beta_r > 0.0)) {
        throw DomainError("profile_regions: need rotor_poles >= 2 and positive arcs");
    }
    if (!(beta_s <= beta_r)) throw DomainError("profile_regions: beta_s must not exceed beta_r");
    ProfileRegions r;
    r.pitch = 2.0 * kPi / rotor_poles;
    r.aligned = 0.5 * r.pitch;
    if (!(beta_s + beta_r < r.pitch)) {
        throw DomainError("profile_regions: beta_s + beta_r must be < 2π/n_r");
    }
    const double half_sum = 0.5 * (beta_s + beta_r);
    const double half_diff = 0.5 * (beta_r - beta_s);
    r.overlap_start = r.aligned - half_sum;
    r.full_overlap = r.aligned - half_diff;
    r.dwell_end = r.aligned + half_diff;
    r.overlap_end = r.aligned + half_sum;
    return r;
}

double inductance_at(const ProfileRegions& r, double la, double lu, double theta) {
    if (theta >= r.full_overlap && theta <= r.dwell_end) return la;
    if (theta > r.overlap_start && theta < r.full_overlap) {
        return lu + (la - lu) * (theta - r.overlap_start) / (r.full_overlap - r.overlap_start);
    }
    if (theta > r.dwell_end && theta < r.overlap_end) {
        return la - (la - lu) * (theta - r.dwell_end) / (r.overlap_end - r.dwell_end);
    }
    return lu;
}

CurveSeries inductance_profile(const ProfileRegions& r, double la, double lu,
                               std::span<const double> grid, Execution exec) {
    for (double t : grid) {
        if (!(t >= 0.0 && t <= r.pitch)) {
            throw DomainError("inductance_profile: angle " + fmt(t) + " rad outside one rotor pole pitch");
        }
    }
    auto ys = map_grid(exec, grid, [&](double t) { return inductance_at(r, la, lu, t); });
    return CurveSeries("inductance_profile", "rotor angle [rad]", "inductance [H]",
                       std::vector<double>(grid.begin(), grid.end()), ys);
}

CurveSeries inductance_profile(const Geometry& g, double current, const Material& m,
                               std::span<const PathEntry> table, std::span<const double> grid,
                               Execution exec) {
    const double la = aligned_inductance(g, current, m).la;
    const double lu = unaligned_inductance(g, m, table, current).lu;
    return inductance_profile(profile_regions(g.beta_s, g.beta_r, g.rotor_poles), la, lu, grid, exec);
}

TorqueResult average_torque(double la, double lu, double current, int phases, int rotor_poles,
                            double speed_rpm) {
    if (!(la > lu)) throw DomainError("average_torque: la must exceed lu");
    if (!(current > 0.0) || phases < 1 || rotor_poles < 1) {
        throw DomainError("average_torque: current, phases and rotor poles must be > 0");
    }
    if (!(speed_rpm >= 0.0)) throw DomainError("average_torque: speed must be >= 0");
    TorqueResult t;
    t.stroke_energy = 0.5 * (la - lu) * current * current;
    t.torque = phases * rotor_poles * t.stroke_energy / (2.0 * kPi);
    t.airgap_power = t.torque * 2.0 * kPi * speed_rpm / 60.0;
    return t;
}

Report evaluate_srm(const Spec& spec, const Geometry& g, const Material& m, const Constants& c,
                    Execution exec) {
    validate(spec);
    validate(c);
    Report rep;
    rep.geometry = g;
    rep.evaluation_current = spec.peak_current;
    auto aligned = aligned_inductance(g, spec.peak_current, m);
    auto unaligned = unaligned_inductance(g, m, c.flux_paths, spec.peak_current);
    rep.la = aligned.la;
    rep.lu = unaligned.lu;
    if (!(rep.la > rep.lu)) {
        throw InfeasibleDesign("la > lu", "aligned inductance " + fmt(rep.la) +
                                              " H does not exceed unaligned " + fmt(rep.lu) + " H");
    }
    rep.flux_paths.push_back(std::move(aligned.main_path));
    for (auto& p : unaligned.paths) rep.flux_paths.push_back(std::move(p));

    rep.regions = profile_regions(g.beta_s, g.beta_r, g.rotor_poles);
    const auto grid = linear_grid(0.0, rep.regions.pitch, static_cast<std::size_t>(c.profile_points));
    rep.profile = inductance_profile(rep.regions, rep.la, rep.lu, grid, exec);

    const auto t = average_torque(rep.la, rep.lu, spec.peak_current, g.phases, g.rotor_poles, spec.speed_rpm);
    rep.average_torque = t.torque;
    rep.airgap_power = t.airgap_power;
    rep.target_torque = target_torque(spec);
    rep.torque_gap = rep.average_torque - rep.target_torque;
    rep.target_achieved = std::abs(rep.torque_gap) <= c.torque_tolerance * rep.target_torque;
    return rep;
}

Report design_srm(const Spec& spec, const Material& m, const Constants& c, Execution exec) {
    return evaluate_srm(spec, size_srm(spec, m, c), m, c, exec);
}

std::vector<Suggestion> suggest_refinement(const Report& rep, const Spec& spec, const Constants& c) {
    std::vector<Suggestion> out;
    const double tol = c.torque_tolerance * rep.target_torque;
    if (std::abs(rep.torque_gap) <= tol) return out;

    const double step = c.refinement_step;
    const double max_sum = 2.0 * kPi / spec.rotor_poles - kArcMargin;
    const double min_s = 2.0 * kPi / (spec.phases * spec.rotor_poles);
    const double ratio = std::sqrt(rep.target_torque / rep.average_torque);

    if (rep.torque_gap < 0.0) {
        // β_s is bounded by β_r and by the sum limit.
        const double cap = std::min(spec.beta_r, max_sum - spec.beta_r);
        if (spec.beta_s < cap) {
            const double v = std::min(spec.beta_s + step, cap);
            out.push_back({"beta_s", "increase", v,
                           "average torque is " + fmt(-rep.torque_gap) +
                               " N·m short of target; a wider stator pole arc raises the aligned inductance"});
        } else if (spec.beta_r + spec.beta_s < max_sum) {
            const double v = std::min(spec.beta_r + step, max_sum - spec.beta_s);
            out.push_back({"beta_r", "increase", v,
                           "beta_s is limited by beta_r; widen the rotor arc first to make room"});
        }
        out.push_back({"peak_current", "increase", spec.peak_current * ratio,
                       "torque grows with the square of the phase current below saturation"});
    } else {
        if (spec.beta_s > min_s) {
            const double v = std::max(spec.beta_s - step, min_s);
            out.push_back({"beta_s", "decrease", v,
                           "average torque exceeds target by " + fmt(rep.torque_gap) +
                               " N·m; a narrower stator arc frees winding space"});
        }
        out.push_back({"peak_current", "decrease", spec.peak_current * ratio,
                       "the target can be met at a lower phase current"});
    }
    return out;
}

}  // namespace emcad::srm
