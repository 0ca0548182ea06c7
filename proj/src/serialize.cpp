#include "emcad/serialize.hpp"

#include <cmath>

namespace emcad {

Json curve_to_json(const CurveSeries& c) {
    return {{"name", c.name()}, {"x_label", c.x_label()}, {"y_label", c.y_label()},
            {"x", c.xs()},      {"y", c.ys()}};
}

namespace {

std::vector<double> number_array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ValidationError(path, path + ": expected an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) {
            const auto p = index_path(path, i);
            throw ValidationError(p, p + ": expected a number");
        }
        out.push_back(j[i].get<double>());
    }
    return out;
}

}  // namespace

CurveSeries curve_from_json(const Json& j, const std::string& path) {
    ObjectReader r(j, path);
    auto name = r.string("name");
    auto xl = r.string("x_label");
    auto yl = r.string("y_label");
    auto xs = number_array(r.child("x"), r.path_of("x"));
    auto ys = number_array(r.child("y"), r.path_of("y"));
    r.finish();
    if (xs.size() != ys.size()) {
        throw ValidationError(r.path_of("y"), r.path_of("y") + ": length differs from x");
    }
    try {
        return CurveSeries(std::move(name), std::move(xl), std::move(yl), xs, ys);
    } catch (const std::exception& e) {
        throw ValidationError(path, (path.empty() ? std::string("curve") : path) + ": " + e.what());
    }
}

Json material_library_to_json(const MaterialLibrary& lib) {
    Json mats = Json::array();
    for (const auto& m : lib) mats.push_back(material_to_json(m));
    return {{"schema_version", kSchemaVersion}, {"materials", mats}};
}

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

namespace {

Json main_json(const MainDimensions& m) { return {{"d", m.d}, {"l", m.l}}; }
Json loadings_json(const Loadings& l) { return {{"b_av", l.b_av}, {"ac", l.ac}}; }

}  // namespace

// ---------------------------------------------------------------- transformer

namespace transformer {

namespace {
const char* name(CoreForm f) { return f == CoreForm::core ? "core" : "shell"; }
const char* name(Connection c) {
    switch (c) {
        case Connection::star: return "star";
        case Connection::delta: return "delta";
        case Connection::single: return "single";
    }
    return "";
}
}  // namespace

Json to_json(const Spec& s) {
    return {{"kva", s.kva},
            {"hv_voltage", s.hv_voltage},
            {"lv_voltage", s.lv_voltage},
            {"frequency", s.frequency},
            {"phases", s.phases},
            {"core_form", name(s.core_form)},
            {"connection", name(s.connection)},
            {"material", s.material}};
}

Spec spec_from_json(const Json& j, const std::string& path) {
    ObjectReader r(j, path);
    Spec s;
    s.kva = r.number("kva");
    s.hv_voltage = r.number("hv_voltage");
    s.lv_voltage = r.number("lv_voltage");
    s.frequency = r.number("frequency");
    s.phases = r.integer("phases");
    s.core_form = r.enumeration<CoreForm>("core_form", {{"core", CoreForm::core}, {"shell", CoreForm::shell}});
    s.connection = r.enumeration<Connection>(
        "connection",
        {{"star", Connection::star}, {"delta", Connection::delta}, {"single", Connection::single}});
    s.material = r.string("material");
    r.finish();
    return s;
}

Json to_json(const Constants& c) {
    Json j = {{"emf_factor",
               {{"single_core", c.emf_factor.single_core},
                {"single_shell", c.emf_factor.single_shell},
                {"three_core", c.emf_factor.three_core},
                {"three_shell", c.emf_factor.three_shell}}},
              {"flux_density_core", c.flux_density_core},
              {"flux_density_shell", c.flux_density_shell},
              {"current_density_a_mm2", c.current_density_a_mm2},
              {"window_height_to_width_core", c.window_height_to_width_core},
              {"window_height_to_width_shell", c.window_height_to_width_shell},
              {"interwinding_gap_fraction", c.interwinding_gap_fraction},
              {"resistivity_ohm_m", c.resistivity_ohm_m},
              {"report_pf", c.report_pf},
              {"efficiency_grid_points", c.efficiency_grid_points}};
    j["window_space_factor"] = c.window_space_factor ? Json(*c.window_space_factor) : Json(nullptr);
    return j;
}

Constants constants_from_json(const Json& j, const std::string& path) {
    ObjectReader r(j, path);
    Constants c;
    ObjectReader e(r.child("emf_factor"), r.path_of("emf_factor"));
    c.emf_factor.single_core = e.number("single_core");
    c.emf_factor.single_shell = e.number("single_shell");
    c.emf_factor.three_core = e.number("three_core");
    c.emf_factor.three_shell = e.number("three_shell");
    e.finish();
    c.flux_density_core = r.number("flux_density_core");
    c.flux_density_shell = r.number("flux_density_shell");
    c.current_density_a_mm2 = r.number("current_density_a_mm2");
    c.window_space_factor = r.optional_number("window_space_factor");
    c.window_height_to_width_core = r.number("window_height_to_width_core");
    c.window_height_to_width_shell = r.number("window_height_to_width_shell");
    c.interwinding_gap_fraction = r.number("interwinding_gap_fraction");
    c.resistivity_ohm_m = r.number("resistivity_ohm_m");
    c.report_pf = r.number("report_pf");
    c.efficiency_grid_points = r.integer("efficiency_grid_points");
    r.finish();
    return c;
}

Json to_json(const Design& d) {
    return {{"rated_kva", d.rated_kva},
            {"emf_per_turn_seed", d.emf_per_turn_seed},
            {"emf_per_turn", d.emf_per_turn},
            {"flux_max", d.flux_max},
            {"core_area", d.core_area},
            {"flux_density", d.flux_density},
            {"hv_turns", d.hv_turns},
            {"lv_turns", d.lv_turns},
            {"hv_phase_voltage", d.hv_phase_voltage},
            {"lv_phase_voltage", d.lv_phase_voltage},
            {"hv_phase_current", d.hv_phase_current},
            {"lv_phase_current", d.lv_phase_current},
            {"window_space_factor", d.window_space_factor},
            {"window_area", d.window_area},
            {"window_height", d.window_height},
            {"window_width", d.window_width},
            {"hv_conductor_area", d.hv_conductor_area},
            {"lv_conductor_area", d.lv_conductor_area},
            {"core_mass", d.core_mass},
            {"core_loss", d.core_loss},
            {"copper_loss_fl", d.copper_loss_fl},
            {"r_equivalent_hv", d.r_equivalent_hv},
            {"x_equivalent_hv", d.x_equivalent_hv},
            {"no_load_current_pct", d.no_load_current_pct},
            {"max_efficiency_load", d.max_efficiency_load},
            {"efficiency_fl", d.efficiency_fl},
            {"regulation_fl", d.regulation_fl},
            {"curves", {{d.efficiency_curve.name(), curve_to_json(d.efficiency_curve)}}}};
}

}  // namespace transformer

// ------------------------------------------------------------------ induction

namespace induction {

Json to_json(const Spec& s) {
    return {{"power_kw", s.power_kw},
            {"line_voltage", s.line_voltage},
            {"frequency", s.frequency},
            {"phases", s.phases},
            {"poles", s.poles},
            {"assumed_efficiency", s.assumed_efficiency},
            {"assumed_pf", s.assumed_pf},
            {"winding_factor", s.winding_factor},
            {"material", s.material}};
}

Spec spec_from_json(const Json& j, const std::string& path) {
    ObjectReader r(j, path);
    Spec s;
    s.power_kw = r.number("power_kw");
    s.line_voltage = r.number("line_voltage");
    s.frequency = r.number("frequency");
    s.phases = r.integer("phases");
    s.poles = r.integer("poles");
    if (r.has("assumed_efficiency")) s.assumed_efficiency = r.number("assumed_efficiency");
    if (r.has("assumed_pf")) s.assumed_pf = r.number("assumed_pf");
    if (r.has("winding_factor")) s.winding_factor = r.number("winding_factor");
    s.material = r.string("material");
    r.finish();
    return s;
}

Json to_json(const Constants& c) {
    return {{"b_av", c.b_av},
            {"ac", c.ac},
            {"b_av_min", c.b_av_min},
            {"b_av_max", c.b_av_max},
            {"ac_min", c.ac_min},
            {"ac_max", c.ac_max},
            {"c0_factor", c.c0_factor},
            {"single_phase_derating", c.single_phase_derating},
            {"l_over_tau", c.l_over_tau},
            {"air_gap_base_mm", c.air_gap_base_mm},
            {"air_gap_coeff_mm", c.air_gap_coeff_mm},
            {"slots_per_pole_per_phase", c.slots_per_pole_per_phase},
            {"single_phase_slots_per_pole", c.single_phase_slots_per_pole},
            {"stator_connection", c.stator_connection == StatorConnection::star ? "star" : "delta"},
            {"stator_current_density_a_mm2", c.stator_current_density_a_mm2},
            {"bar_current_density_a_mm2", c.bar_current_density_a_mm2},
            {"ring_current_density_a_mm2", c.ring_current_density_a_mm2},
            {"stator_resistivity_ohm_m", c.stator_resistivity_ohm_m},
            {"rotor_resistivity_ohm_m", c.rotor_resistivity_ohm_m},
            {"leakage_permeance", c.leakage_permeance},
            {"x2_over_x1", c.x2_over_x1},
            {"rotor_slot_offset", c.rotor_slot_offset},
            {"torque_grid_points", c.torque_grid_points}};
}

Constants constants_from_json(const Json& j, const std::string& path) {
    ObjectReader r(j, path);
    Constants c;
    c.b_av = r.number("b_av");
    c.ac = r.number("ac");
    c.b_av_min = r.number("b_av_min");
    c.b_av_max = r.number("b_av_max");
    c.ac_min = r.number("ac_min");
    c.ac_max = r.number("ac_max");
    c.c0_factor = r.number("c0_factor");
    c.single_phase_derating = r.number("single_phase_derating");
    c.l_over_tau = r.number("l_over_tau");
    c.air_gap_base_mm = r.number("air_gap_base_mm");
    c.air_gap_coeff_mm = r.number("air_gap_coeff_mm");
    c.slots_per_pole_per_phase = r.integer("slots_per_pole_per_phase");
    c.single_phase_slots_per_pole = r.integer("single_phase_slots_per_pole");
    c.stator_connection = r.enumeration<StatorConnection>(
        "stator_connection", {{"star", StatorConnection::star}, {"delta", StatorConnection::delta}});
    c.stator_current_density_a_mm2 = r.number("stator_current_density_a_mm2");
    c.bar_current_density_a_mm2 = r.number("bar_current_density_a_mm2");
    c.ring_current_density_a_mm2 = r.number("ring_current_density_a_mm2");
    c.stator_resistivity_ohm_m = r.number("stator_resistivity_ohm_m");
    c.rotor_resistivity_ohm_m = r.number("rotor_resistivity_ohm_m");
    c.leakage_permeance = r.number("leakage_permeance");
    c.x2_over_x1 = r.number("x2_over_x1");
    c.rotor_slot_offset = r.integer("rotor_slot_offset");
    c.torque_grid_points = r.integer("torque_grid_points");
    r.finish();
    return c;
}

Json to_json(const Design& d) {
    const auto& ec = d.equivalent_circuit;
    return {{"kva_input", d.kva_input},
            {"synchronous_speed_rpm", d.synchronous_speed_rpm},
            {"output_coefficient", d.output_coefficient},
            {"d2l", d.d2l},
            {"main", main_json(d.main)},
            {"loadings", loadings_json(d.loadings)},
            {"flux_per_pole", d.flux_per_pole},
            {"phase_voltage", d.phase_voltage},
            {"phase_current", d.phase_current},
            {"stator_slots", d.stator_slots},
            {"conductors_per_slot", d.conductors_per_slot},
            {"stator_turns_per_phase", d.stator_turns_per_phase},
            {"total_ampere_conductors", d.total_ampere_conductors},
            {"ac_actual", d.ac_actual},
            {"conductor_area", d.conductor_area},
            {"air_gap", d.air_gap},
            {"rotor_bars", d.rotor_bars},
            {"bar_current", d.bar_current},
            {"bar_area", d.bar_area},
            {"end_ring_current", d.end_ring_current},
            {"end_ring_area", d.end_ring_area},
            {"equivalent_circuit", {{"r1", ec.r1}, {"x1", ec.x1}, {"r2", ec.r2}, {"x2", ec.x2}}},
            {"peak_torque_slip", d.peak_torque_slip},
            {"peak_torque", d.peak_torque},
            {"curves",
             {{d.torque_slip.name(), curve_to_json(d.torque_slip)},
              {d.torque_slip_sync_watts.name(), curve_to_json(d.torque_slip_sync_watts)}}}};
}

}  // namespace induction

// ---------------------------------------------------------------- synchronous

namespace synchronous {

Json to_json(const Spec& s) {
    return {{"kva", s.kva},
            {"line_voltage", s.line_voltage},
            {"frequency", s.frequency},
            {"speed_rpm", s.speed_rpm},
            {"rotor_type", s.rotor_type == RotorType::salient ? "salient" : "round"},
            {"phases", s.phases},
            {"winding_factor", s.winding_factor},
            {"material", s.material}};
}

Spec spec_from_json(const Json& j, const std::string& path) {
    ObjectReader r(j, path);
    Spec s;
    s.kva = r.number("kva");
    s.line_voltage = r.number("line_voltage");
    s.frequency = r.number("frequency");
    s.speed_rpm = r.number("speed_rpm");
    s.rotor_type =
        r.enumeration<RotorType>("rotor_type", {{"salient", RotorType::salient}, {"round", RotorType::round}});
    if (r.has("phases")) s.phases = r.integer("phases");
    if (r.has("winding_factor")) s.winding_factor = r.number("winding_factor");
    s.material = r.string("material");
    r.finish();
    return s;
}

Json to_json(const Constants& c) {
    return {{"b_av", c.b_av},
            {"ac", c.ac},
            {"b_av_max", c.b_av_max},
            {"ac_min", c.ac_min},
            {"ac_max", c.ac_max},
            {"c0_factor", c.c0_factor},
            {"l_over_tau_salient", c.l_over_tau_salient},
            {"l_over_tau_round", c.l_over_tau_round},
            {"salient_min_poles", c.salient_min_poles},
            {"salient_peripheral_speed_limit", c.salient_peripheral_speed_limit},
            {"round_peripheral_speed_limit", c.round_peripheral_speed_limit},
            {"pole_arc_ratio", c.pole_arc_ratio},
            {"round_gap_flux_factor", c.round_gap_flux_factor},
            {"slots_per_pole_per_phase", c.slots_per_pole_per_phase},
            {"slot_opening_ratio", c.slot_opening_ratio},
            {"slot_fill", c.slot_fill},
            {"stator_current_density_a_mm2", c.stator_current_density_a_mm2},
            {"short_circuit_ratio", c.short_circuit_ratio},
            {"tooth_flux_density", c.tooth_flux_density},
            {"core_flux_density", c.core_flux_density},
            {"field_current_density_a_mm2", c.field_current_density_a_mm2},
            {"field_fill_factor", c.field_fill_factor},
            {"exciter_voltage", c.exciter_voltage},
            {"exciter_reserve", c.exciter_reserve},
            {"full_load_field_ratio", c.full_load_field_ratio},
            {"field_coil_height_ratio", c.field_coil_height_ratio},
            {"resistivity_ohm_m", c.resistivity_ohm_m},
            {"occ_max_field_ratio", c.occ_max_field_ratio},
            {"occ_points", c.occ_points},
            {"core_loss_points", c.core_loss_points},
            {"carter_exact", c.carter_exact}};
}

Constants constants_from_json(const Json& j, const std::string& path) {
    ObjectReader r(j, path);
    Constants c;
    c.b_av = r.number("b_av");
    c.ac = r.number("ac");
    c.b_av_max = r.number("b_av_max");
    c.ac_min = r.number("ac_min");
    c.ac_max = r.number("ac_max");
    c.c0_factor = r.number("c0_factor");
    c.l_over_tau_salient = r.number("l_over_tau_salient");
    c.l_over_tau_round = r.number("l_over_tau_round");
    c.salient_min_poles = r.integer("salient_min_poles");
    c.salient_peripheral_speed_limit = r.number("salient_peripheral_speed_limit");
    c.round_peripheral_speed_limit = r.number("round_peripheral_speed_limit");
    c.pole_arc_ratio = r.number("pole_arc_ratio");
    c.round_gap_flux_factor = r.number("round_gap_flux_factor");
    c.slots_per_pole_per_phase = r.integer("slots_per_pole_per_phase");
    c.slot_opening_ratio = r.number("slot_opening_ratio");
    c.slot_fill = r.number("slot_fill");
    c.stator_current_density_a_mm2 = r.number("stator_current_density_a_mm2");
    c.short_circuit_ratio = r.number("short_circuit_ratio");
    c.tooth_flux_density = r.number("tooth_flux_density");
    c.core_flux_density = r.number("core_flux_density");
    c.field_current_density_a_mm2 = r.number("field_current_density_a_mm2");
    c.field_fill_factor = r.number("field_fill_factor");
    c.exciter_voltage = r.number("exciter_voltage");
    c.exciter_reserve = r.number("exciter_reserve");
    c.full_load_field_ratio = r.number("full_load_field_ratio");
    c.field_coil_height_ratio = r.number("field_coil_height_ratio");
    c.resistivity_ohm_m = r.number("resistivity_ohm_m");
    c.occ_max_field_ratio = r.number("occ_max_field_ratio");
    c.occ_points = r.integer("occ_points");
    c.core_loss_points = r.integer("core_loss_points");
    c.carter_exact = r.boolean("carter_exact");
    r.finish();
    return c;
}

Json to_json(const Design& d) {
    const auto& pc = d.pole_circuit;
    return {{"poles", d.poles},
            {"output_coefficient", d.output_coefficient},
            {"d2l", d.d2l},
            {"main", main_json(d.main)},
            {"loadings", loadings_json(d.loadings)},
            {"peripheral_speed", d.peripheral_speed},
            {"flux_per_pole", d.flux_per_pole},
            {"phase_voltage", d.phase_voltage},
            {"phase_current", d.phase_current},
            {"stator_slots", d.stator_slots},
            {"conductors_per_slot", d.conductors_per_slot},
            {"turns_per_phase", d.turns_per_phase},
            {"total_ampere_conductors", d.total_ampere_conductors},
            {"ac_actual", d.ac_actual},
            {"air_gap", d.air_gap},
            {"slot_pitch", d.slot_pitch},
            {"slot_opening", d.slot_opening},
            {"slot_depth", d.slot_depth},
            {"core_depth", d.core_depth},
            {"carter_k", d.carter_k},
            {"pole_circuit",
             {{"gap_length", pc.gap_length},
              {"gap_area", pc.gap_area},
              {"teeth_length", pc.teeth_length},
              {"teeth_area", pc.teeth_area},
              {"core_length", pc.core_length},
              {"core_area", pc.core_area},
              {"include_iron", pc.include_iron}}},
            {"frequency", d.frequency},
            {"winding_factor", d.winding_factor},
            {"no_load_field_mmf", d.no_load_field_mmf},
            {"full_load_field_mmf", d.full_load_field_mmf},
            {"field_turns_per_pole", d.field_turns_per_pole},
            {"field_conductor_area", d.field_conductor_area},
            {"field_current_nl", d.field_current_nl},
            {"field_current_fl", d.field_current_fl},
            {"field_winding_depth", d.field_winding_depth},
            {"stator_core_loss", d.stator_core_loss},
            {"curves",
             {{d.occ.name(), curve_to_json(d.occ)},
              {d.core_loss_curve.name(), curve_to_json(d.core_loss_curve)},
              {d.field_winding_depth_curve.name(), curve_to_json(d.field_winding_depth_curve)}}}};
}

}  // namespace synchronous

// ------------------------------------------------------------------------- dc

namespace dc {

Json to_json(const Spec& s) {
    return {{"power_kw", s.power_kw},
            {"voltage", s.voltage},
            {"speed_rpm", s.speed_rpm},
            {"poles", s.poles},
            {"winding", s.winding == Winding::lap ? "lap" : "wave"},
            {"material", s.material}};
}

Spec spec_from_json(const Json& j, const std::string& path) {
    ObjectReader r(j, path);
    Spec s;
    s.power_kw = r.number("power_kw");
    s.voltage = r.number("voltage");
    s.speed_rpm = r.number("speed_rpm");
    s.poles = r.integer("poles");
    s.winding = r.enumeration<Winding>("winding", {{"lap", Winding::lap}, {"wave", Winding::wave}});
    s.material = r.string("material");
    r.finish();
    return s;
}

Json to_json(const Constants& c) {
    return {{"b_av", c.b_av},
            {"ac", c.ac},
            {"b_av_max", c.b_av_max},
            {"ac_min", c.ac_min},
            {"ac_max", c.ac_max},
            {"l_over_tau", c.l_over_tau},
            {"target_slot_pitch", c.target_slot_pitch},
            {"max_conductors_per_slot", c.max_conductors_per_slot}};
}

Constants constants_from_json(const Json& j, const std::string& path) {
    ObjectReader r(j, path);
    Constants c;
    c.b_av = r.number("b_av");
    c.ac = r.number("ac");
    c.b_av_max = r.number("b_av_max");
    c.ac_min = r.number("ac_min");
    c.ac_max = r.number("ac_max");
    c.l_over_tau = r.number("l_over_tau");
    c.target_slot_pitch = r.number("target_slot_pitch");
    c.max_conductors_per_slot = r.integer("max_conductors_per_slot");
    r.finish();
    return c;
}

Json to_json(const Design& d) {
    return {{"output_coefficient", d.output_coefficient},
            {"d2l", d.d2l},
            {"main", main_json(d.main)},
            {"loadings", loadings_json(d.loadings)},
            {"flux_per_pole", d.flux_per_pole},
            {"parallel_paths", d.parallel_paths},
            {"armature_conductors", d.armature_conductors},
            {"slots", d.slots},
            {"conductors_per_slot", d.conductors_per_slot},
            {"armature_current", d.armature_current},
            {"conductor_current", d.conductor_current},
            {"total_ampere_conductors", d.total_ampere_conductors},
            {"ac_actual", d.ac_actual},
            {"emf_check", d.emf_check},
            {"emf_resolution", d.emf_resolution},
            {"curves", Json::object()}};
}

}  // namespace dc

// ------------------------------------------------------------------------ srm

namespace srm {

namespace {

constexpr std::pair<std::string_view, PathRecipe> kRecipes[] = {
    {"face_to_slot_bottom", PathRecipe::face_to_slot_bottom},
    {"face_to_pole_side", PathRecipe::face_to_pole_side},
    {"side_to_pole_tip", PathRecipe::side_to_pole_tip},
    {"side_to_pole_side", PathRecipe::side_to_pole_side},
    {"interpolar_leakage", PathRecipe::interpolar_leakage},
    {"end_fringe", PathRecipe::end_fringe},
    {"end_winding", PathRecipe::end_winding},
};

Json segment_json(const CircuitSegment& s) {
    Json j = {{"length", s.length}, {"area", s.area}};
    switch (s.kind) {
        case SegmentKind::airgap: j["kind"] = "airgap"; break;
        case SegmentKind::iron:
            j["kind"] = "iron";
            j["material"] = s.material ? s.material->name() : "";
            break;
        case SegmentKind::linear_iron:
            j["kind"] = "linear_iron";
            j["relative_permeability"] = s.relative_permeability;
            break;
    }
    return j;
}

}  // namespace

Json to_json(const Spec& s) {
    return {{"target_kind", s.target_kind == TargetKind::power ? "power" : "torque"},
            {"target_value", s.target_value},
            {"speed_rpm", s.speed_rpm},
            {"dc_voltage", s.dc_voltage},
            {"phases", s.phases},
            {"stator_poles", s.stator_poles},
            {"rotor_poles", s.rotor_poles},
            {"beta_s", s.beta_s},
            {"beta_r", s.beta_r},
            {"air_gap", s.air_gap},
            {"peak_current", s.peak_current},
            {"material", s.material}};
}

Spec spec_from_json(const Json& j, const std::string& path) {
    ObjectReader r(j, path);
    Spec s;
    s.target_kind =
        r.enumeration<TargetKind>("target_kind", {{"power", TargetKind::power}, {"torque", TargetKind::torque}});
    s.target_value = r.number("target_value");
    s.speed_rpm = r.number("speed_rpm");
    s.dc_voltage = r.number("dc_voltage");
    s.phases = r.integer("phases");
    s.stator_poles = r.integer("stator_poles");
    s.rotor_poles = r.integer("rotor_poles");
    s.beta_s = r.number("beta_s");
    s.beta_r = r.number("beta_r");
    s.air_gap = r.number("air_gap");
    s.peak_current = r.number("peak_current");
    s.material = r.string("material");
    r.finish();
    return s;
}

Json to_json(const Constants& c) {
    Json paths = Json::array();
    for (const auto& p : c.flux_paths) {
        paths.push_back({{"recipe", recipe_name(p.recipe)}, {"enclosure_fraction", p.enclosure_fraction}});
    }
    return {{"efficiency", c.efficiency},
            {"duty", c.duty},
            {"k2", c.k2},
            {"magnetic_loading", c.magnetic_loading},
            {"electric_loading", c.electric_loading},
            {"l_over_tau", c.l_over_tau},
            {"stator_back_iron_factor", c.stator_back_iron_factor},
            {"rotor_back_iron_factor", c.rotor_back_iron_factor},
            {"rotor_pole_height_ratio", c.rotor_pole_height_ratio},
            {"pole_flux_density", c.pole_flux_density},
            {"current_density_a_mm2", c.current_density_a_mm2},
            {"fill_factor", c.fill_factor},
            {"max_pole_height_to_bore", c.max_pole_height_to_bore},
            {"flux_paths", paths},
            {"profile_points", c.profile_points},
            {"torque_tolerance", c.torque_tolerance},
            {"refinement_step", c.refinement_step}};
}

Constants constants_from_json(const Json& j, const std::string& path) {
    ObjectReader r(j, path);
    Constants c;
    c.efficiency = r.number("efficiency");
    c.duty = r.number("duty");
    c.k2 = r.number("k2");
    c.magnetic_loading = r.number("magnetic_loading");
    c.electric_loading = r.number("electric_loading");
    c.l_over_tau = r.number("l_over_tau");
    c.stator_back_iron_factor = r.number("stator_back_iron_factor");
    c.rotor_back_iron_factor = r.number("rotor_back_iron_factor");
    c.rotor_pole_height_ratio = r.number("rotor_pole_height_ratio");
    c.pole_flux_density = r.number("pole_flux_density");
    c.current_density_a_mm2 = r.number("current_density_a_mm2");
    c.fill_factor = r.number("fill_factor");
    c.max_pole_height_to_bore = r.number("max_pole_height_to_bore");
    const Json& paths = r.child("flux_paths");
    const auto pp = r.path_of("flux_paths");
    if (!paths.is_array()) throw ValidationError(pp, pp + ": expected an array");
    c.flux_paths.clear();
    for (std::size_t i = 0; i < paths.size(); ++i) {
        ObjectReader pr(paths[i], index_path(pp, i));
        PathEntry e;
        const std::string name = pr.string("recipe");
        bool found = false;
        for (const auto& [label, recipe] : kRecipes) {
            if (label == name) {
                e.recipe = recipe;
                found = true;
            }
        }
        if (!found) {
            throw ValidationError(pr.path_of("recipe"), pr.path_of("recipe") + ": unknown recipe '" + name + "'");
        }
        e.enclosure_fraction = pr.number("enclosure_fraction");
        pr.finish();
        c.flux_paths.push_back(e);
    }
    c.profile_points = r.integer("profile_points");
    c.torque_tolerance = r.number("torque_tolerance");
    c.refinement_step = r.number("refinement_step");
    r.finish();
    return c;
}

Json to_json(const Geometry& g) {
    return {{"phases", g.phases},
            {"stator_poles", g.stator_poles},
            {"rotor_poles", g.rotor_poles},
            {"beta_s", g.beta_s},
            {"beta_r", g.beta_r},
            {"air_gap", g.air_gap},
            {"bore_diameter", g.bore_diameter},
            {"stack_length", g.stack_length},
            {"stator_pole_height", g.stator_pole_height},
            {"rotor_pole_height", g.rotor_pole_height},
            {"stator_back_iron", g.stator_back_iron},
            {"rotor_back_iron", g.rotor_back_iron},
            {"stator_pole_width", g.stator_pole_width},
            {"rotor_pole_width", g.rotor_pole_width},
            {"shaft_diameter", g.shaft_diameter},
            {"outer_diameter", g.outer_diameter},
            {"turns_per_phase", g.turns_per_phase}};
}

Json to_json(const Report& r, const std::vector<Suggestion>& suggestions) {
    Json paths = Json::array();
    for (const auto& p : r.flux_paths) {
        Json segs = Json::array();
        for (const auto& s : p.segments) segs.push_back(segment_json(s));
        paths.push_back({{"index", p.index},
                         {"name", p.name},
                         {"segments", segs},
                         {"enclosure_fraction", p.enclosure_fraction},
                         {"solved_b", p.solved_b},
                         {"reluctance", p.reluctance},
                         {"inductance_contribution", p.inductance_contribution}});
    }
    Json advice = Json::array();
    for (const auto& s : suggestions) {
        advice.push_back({{"parameter", s.parameter},
                          {"direction", s.direction},
                          {"suggested_value", s.suggested_value},
                          {"rationale", s.rationale}});
    }
    const auto& g = r.regions;
    return {{"geometry", to_json(r.geometry)},
            {"la", r.la},
            {"lu", r.lu},
            {"evaluation_current", r.evaluation_current},
            {"flux_paths", paths},
            {"regions",
             {{"pitch", g.pitch},
              {"overlap_start", g.overlap_start},
              {"full_overlap", g.full_overlap},
              {"dwell_end", g.dwell_end},
              {"overlap_end", g.overlap_end},
              {"aligned", g.aligned}}},
            {"average_torque", r.average_torque},
            {"airgap_power", r.airgap_power},
            {"target_torque", r.target_torque},
            {"torque_gap", r.torque_gap},
            {"target_achieved", r.target_achieved},
            {"suggestions", advice},
            {"curves", {{r.profile.name(), curve_to_json(r.profile)}}}};
}

}  // namespace srm

}  // namespace emcad
