// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each check compares the engine against an independent oracle.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "emcad/families.hpp"
#include "emcad/magnetic_circuit.hpp"
#include "emcad/serialize.hpp"
#include "emcad/sizing.hpp"
#include "emcad/srm.hpp"
#include "emcad/synchronous.hpp"
#include "emcad/transformer.hpp"
#include "emcad/induction.hpp"
#include "emcad/units.hpp"
#include "emcad/workbench.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace emcad;

namespace {

constexpr double kPiRef = std::numbers::pi;

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Records the first failure message; later checks still run.
class Check {
public:
    void require(bool cond, const std::string& what) {
        if (!cond && ok_) {
            ok_ = false;
            first_ = what;
        }
    }
    void near_rel(double got, double want, double tol, const std::string& what) {
        const double err = std::abs(got - want) / std::max(std::abs(want), 1e-300);
        worst_ = std::max(worst_, err);
        if (!(err <= tol)) {
            std::ostringstream s;
            s << what << ": got " << got << " want " << want << " rel err " << err;
            require(false, s.str());
        }
    }
    void near_abs(double got, double want, double tol, const std::string& what) {
        const double err = std::abs(got - want);
        if (!(err <= tol)) {
            std::ostringstream s;
            s << what << ": got " << got << " want " << want << " abs err " << err;
            require(false, s.str());
        }
    }
    double worst() const { return worst_; }
    Outcome outcome(const std::string& pass_detail) const {
        return ok_ ? Outcome{true, pass_detail} : Outcome{false, first_};
    }

private:
    bool ok_ = true;
    std::string first_;
    double worst_ = 0.0;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

const Material& steel(const std::string& name = fixture::kSteel) {
    return find_material(bundled_material_library(), name);
}

// Signs of consecutive differences with repeats collapsed.
std::vector<int> slope_signs(const std::vector<double>& ys, double eps) {
    std::vector<int> out;
    for (std::size_t i = 1; i < ys.size(); ++i) {
        const double d = ys[i] - ys[i - 1];
        const int s = d > eps ? 1 : (d < -eps ? -1 : 0);
        if (out.empty() || out.back() != s) out.push_back(s);
    }
    return out;
}

// 1. Output equation and loading algebra.
Outcome criterion_sizing() {
    Check c;
    std::mt19937_64 rng(1001);
    std::uniform_real_distribution<double> p(1.0, 5000.0), dim(0.05, 2.0), n(100.0, 3600.0),
        phi(1e-4, 0.5), iz(100.0, 1e6), ratio(0.5, 3.0);
    std::uniform_int_distribution<int> pp(1, 12);
    for (int k = 0; k < 1000; ++k) {
        const double P = p(rng), D = dim(rng), L = dim(rng), N = n(rng), f = phi(rng), a = iz(rng);
        const int poles = 2 * pp(rng);
        c.near_rel(output_coefficient(P, D, L, N), P / (D * D * L * N), 1e-9, "C0");
        const double b = specific_magnetic_loading(poles, f, D, L);
        c.near_rel(b, poles * f / (kPiRef * D * L), 1e-9, "B_av");
        c.near_rel(flux_per_pole_from_loading(poles, b, D, L), f, 1e-9, "B_av round trip");
        c.near_rel(specific_electric_loading(a, D), a / (kPiRef * D), 1e-9, "ac");
        const double d2l = D * D * L;
        const double r = ratio(rng);
        const auto m1 = separate_main_dimensions(d2l, RatioPolicy{r}, poles);
        c.near_rel(m1.d * m1.d * m1.l, d2l, 1e-9, "ratio D²L");
        c.near_rel(m1.l, r * kPiRef * m1.d / poles, 1e-9, "ratio L/τ");
        const auto m2 = separate_main_dimensions(d2l, FixedDiameter{D}, poles);
        c.near_rel(m2.l, L, 1e-9, "fixed D");
        const auto m3 = separate_main_dimensions(d2l, FixedLength{L}, poles);
        c.near_rel(m3.d, D, 1e-9, "fixed L");
        // C0 from the separated dimensions recovers P
        c.near_rel(output_coefficient(P, m1.d, m1.l, N) * m1.d * m1.d * m1.l * N, P, 1e-9, "P round trip");
    }
    return c.outcome("1000 cases, worst rel err " + fmt(c.worst()));
}

// 2. Series magnetic-circuit solver.
Outcome criterion_solver() {
    Check c;
    const auto& lib = bundled_material_library();
    std::mt19937_64 rng(2002);
    std::uniform_real_distribution<double> gap(0.1e-3, 3e-3), area(2e-4, 5e-3), len(0.02, 0.6),
        mmf(20.0, 30000.0), scale(0.5, 2.0);
    std::uniform_int_distribution<int> n_iron(1, 3), mat(0, static_cast<int>(lib.size()) - 1);
    for (int k = 0; k < 200; ++k) {
        std::vector<CircuitSegment> segs;
        const double a0 = area(rng);
        segs.push_back(CircuitSegment::air(gap(rng), a0 * scale(rng)));
        const int ni = n_iron(rng);
        for (int i = 0; i < ni; ++i) segs.push_back(CircuitSegment::iron(len(rng), a0 * scale(rng), lib[mat(rng)]));
        const double f = mmf(rng);
        // iron only adds drop, so the air-only flux bounds the root
        double r_air = 0.0;
        for (const auto& s : segs) {
            if (s.kind == SegmentKind::airgap) r_air += s.length / (kMu0 * s.area);
        }
        const double ref = oracle::sweep_flux(segs, f, 1.000001 * f / r_air, 1000000);
        const double got = solve_series_magnetic_circuit(segs, f).flux;
        c.near_rel(got, ref, 1e-6, "circuit " + std::to_string(k));
    }
    const double worst_iron = c.worst();
    Check air;
    for (int k = 0; k < 200; ++k) {
        std::vector<CircuitSegment> segs;
        double r = 0.0;
        for (int i = 0; i < 1 + k % 4; ++i) {
            segs.push_back(CircuitSegment::air(gap(rng), area(rng)));
            r += segs.back().length / (kMu0 * segs.back().area);
        }
        const double f = mmf(rng);
        air.near_rel(solve_series_magnetic_circuit(segs, f).flux, f / r, 1e-12, "air circuit " + std::to_string(k));
    }
    if (!air.outcome("").ok) return air.outcome("");
    return c.outcome("200 gap+iron vs 1e6-point sweep, worst " + fmt(worst_iron) + "; 200 air-only worst " +
                     fmt(air.worst()));
}

// 3. B-H interpolation round trip.
Outcome criterion_bh() {
    Check c;
    std::mt19937_64 rng(3003);
    for (const auto& m : bundled_material_library()) {
        const double b_top = m.bh_points().back().b * 1.2;
        std::uniform_real_distribution<double> bd(0.0, b_top);
        for (int k = 0; k < 10000; ++k) {
            const double b = bd(rng);
            const double h = h_at(m, b);
            c.near_rel(b_at(m, h), b, 1e-9, m.name() + " b_at(h_at(b))");
            c.near_rel(h, oracle::h_of_b(m, b), 1e-9, m.name() + " h_at vs scan");
        }
    }
    return c.outcome(std::to_string(bundled_material_library().size()) + " steels x 1e4 samples, worst " +
                     fmt(c.worst()));
}

// 4. Torque-slip unimodality and peak location.
Outcome criterion_torque_slip() {
    Check c;
    std::mt19937_64 rng(4004);
    std::uniform_real_distribution<double> r1(0.05, 2.0), x(0.1, 3.0), s_target(0.02, 0.9);
    const auto grid = linear_grid(1.0 / 2000.0, 1.0, 2000);
    const double step = grid[1] - grid[0];
    for (int k = 0; k < 100; ++k) {
        induction::TorqueSlipInputs in;
        in.circuit.r1 = r1(rng);
        in.circuit.x1 = x(rng);
        in.circuit.x2 = x(rng);
        const double xs = in.circuit.x1 + in.circuit.x2;
        in.circuit.r2 = s_target(rng) * std::sqrt(in.circuit.r1 * in.circuit.r1 + xs * xs);
        in.v_phase = 230;
        in.frequency = 50;
        in.poles = 4;
        in.phases = 3;
        const auto ys = induction::torque_slip_curve(in, grid).ys();
        const double s_max = in.circuit.r2 / std::sqrt(in.circuit.r1 * in.circuit.r1 + xs * xs);
        c.require(slope_signs(ys, 0.0) == std::vector<int>{1, -1}, "case " + std::to_string(k) + " not (+, -)");
        c.require(std::abs(grid[oracle::argmax(ys)] - s_max) <= step,
                  "case " + std::to_string(k) + " argmax off s_max by more than one step");
    }
    return c.outcome("100 circuits, slope signs (+, -), argmax within one step of s_max");
}

// 5. Open-circuit characteristic saturation per bundled steel.
Outcome criterion_occ() {
    Check c;
    std::string detail;
    for (const auto& m : bundled_material_library()) {
        synchronous::Spec s;
        s.kva = 500;
        s.line_voltage = 3300;
        s.frequency = 50;
        s.speed_rpm = 300;
        s.rotor_type = synchronous::RotorType::salient;
        s.material = m.name();
        const auto d = synchronous::design_synchronous(s, m, {});
        const auto xs = d.occ.xs();
        const auto ys = d.occ.ys();
        const std::size_t n = xs.size();
        for (std::size_t i = 1; i < n; ++i) c.require(ys[i] >= ys[i - 1], m.name() + " OCC decreasing");
        for (std::size_t i = 2; i < n; ++i) {
            const double s1 = (ys[i - 1] - ys[i - 2]) / (xs[i - 1] - xs[i - 2]);
            const double s2 = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
            c.require(s2 <= s1 * (1 + 1e-9), m.name() + " OCC not concave at " + std::to_string(i));
        }
        const std::size_t k20 = (n - 1) / 5;
        const double bottom = (ys[k20] - ys[0]) / (xs[k20] - xs[0]);
        const double top = (ys[n - 1] - ys[n - 1 - k20]) / (xs[n - 1] - xs[n - 1 - k20]);
        const double gap_line = synchronous::air_gap_line_slope(d);
        const double dev = std::abs(bottom - gap_line) / gap_line;
        c.require(dev <= 0.02, m.name() + " bottom secant " + fmt(dev) + " off the air-gap line");
        c.require(top < bottom, m.name() + " top secant not below bottom secant");
        detail += (detail.empty() ? "" : ", ") + m.name() + " low-end dev " + fmt(dev) + " top/bottom " +
                  fmt(top / bottom);
    }
    return c.outcome(detail);
}

// 6. Carter coefficient.
Outcome criterion_carter() {
    Check c;
    for (bool exact : {false, true}) {
        const double pitch = 0.03, gap = 1e-3;
        c.require(synchronous::carter_coefficient(pitch, 0.0, gap, exact) == 1.0, "K_c(0) != 1");
        double last = 1.0;
        for (int k = 0; k < 50; ++k) {
            const double w = pitch * 0.98 * k / 49.0;
            const double kc = synchronous::carter_coefficient(pitch, w, gap, exact);
            c.require(kc >= 1.0, "K_c < 1");
            c.require(kc >= last, "K_c not monotone");
            last = kc;
        }
    }
    return c.outcome("rational and conformal forms, 50-point sweep each");
}

// 7. Transformer EMF quantization and efficiency peak.
Outcome criterion_transformer() {
    Check c;
    const auto corpus = fixture::transformer_corpus();
    double worst_emf = 0.0;
    for (const auto& s : corpus) {
        const auto d = transformer::design_transformer(s, steel(s.material), {});
        const double emf = 4.44 * s.frequency * d.flux_max * d.lv_turns;
        const double err = std::abs(emf - d.lv_phase_voltage) / d.lv_phase_voltage;
        worst_emf = std::max(worst_emf, err * d.lv_turns);
        c.require(err <= 1.0 / d.lv_turns, "EMF off rated beyond 1/lv_turns at " + fmt(s.kva) + " kVA");
        const auto xs = d.efficiency_curve.xs();
        const auto ys = d.efficiency_curve.ys();
        const double x_star = std::sqrt(d.core_loss / d.copper_loss_fl);
        const double x_peak = xs[oracle::argmax(ys)];
        const double expect = std::clamp(x_star, xs.front(), xs.back());
        c.require(std::abs(x_peak - expect) <= xs[1] - xs[0] + 1e-12,
                  "efficiency peak " + fmt(x_peak) + " vs " + fmt(x_star) + " at " + fmt(s.kva) + " kVA");
    }
    return c.outcome(std::to_string(corpus.size()) + " specs, worst EMF error " + fmt(worst_emf) +
                     " of the 1/lv_turns bound");
}

// 8. SRM inductance ordering and profile shape.
Outcome criterion_srm_profile() {
    Check c;
    const auto corpus = fixture::srm_corpus();
    int six_four = 0, eight_six = 0;
    for (const auto& s : corpus) {
        const auto r = srm::design_srm(s, steel(s.material), {});
        (s.rotor_poles == 4 ? six_four : eight_six)++;
        c.require(r.la > r.lu, "la <= lu");
        const auto& pts = r.profile.points();
        c.near_abs(pts.front().y, r.lu, 1e-12 * r.la, "L(0) vs lu");
        c.near_abs(pts[pts.size() / 2].y, r.la, 1e-12 * r.la, "L(aligned grid point) vs la");
        c.near_abs(srm::inductance_at(r.regions, r.la, r.lu, r.regions.aligned), r.la, 1e-12 * r.la,
                   "L(aligned) vs la");
        if (s.beta_r > s.beta_s) {
            auto sig = slope_signs(r.profile.ys(), 1e-12 * r.la);
            if (sig.size() > 4 && sig.back() == 0) sig.pop_back();
            c.require(sig == std::vector<int>{0, 1, 0, -1} || sig == std::vector<int>{0, 1, 0, -1, 0},
                      "slope signature not (0, +, 0, -)");
        }
    }
    auto s = fixture::srm_base();
    s.phases = 4;
    s.stator_poles = 8;
    s.rotor_poles = 6;
    s.beta_s = deg_to_rad(18);
    s.beta_r = deg_to_rad(20);
    const auto r = srm::design_srm(s, steel(), {});
    c.require(r.regions.aligned == kPiRef / 6.0, "n_r = 6 aligned offset not 30 deg");
    c.require(std::abs(r.profile.points()[r.profile.size() / 2].x - kPiRef / 6.0) <= 1e-15,
              "aligned grid point not at 30 deg");
    return c.outcome(std::to_string(corpus.size()) + " geometries (" + std::to_string(six_four) + " 6/4, " +
                     std::to_string(eight_six) + " 8/6), n_r = 6 aligned at " +
                     fmt(rad_to_deg(r.regions.aligned)) + " deg");
}

// 9. Average torque against cyclic loop integration.
Outcome criterion_srm_torque() {
    Check c;
    for (const auto& s : fixture::srm_corpus()) {
        const auto r = srm::design_srm(s, steel(s.material), {});
        const auto f = [&](double th) { return srm::inductance_at(r.regions, r.la, r.lu, th); };
        const double w = oracle::loop_work(f, 0.0, r.regions.aligned, s.peak_current, 2000);
        const double t_loop = s.phases * s.rotor_poles * w / (2.0 * kPiRef);
        c.near_rel(r.average_torque, t_loop, 1e-9, "closed form vs loop");
    }
    const double worst = c.worst();
    const double hand = srm::average_torque(0.010, 0.002, 10.0, 3, 4, 1000.0).torque;
    c.near_abs(hand, 0.7639, 1e-4, "hand case");
    return c.outcome("corpus worst rel err " + fmt(worst) + "; hand case " + fmt(hand) + " N·m");
}

// 10. Determinism, export round trip, CLI exit codes.
Outcome criterion_persistence() {
    Check c;
    const auto& lib = bundled_material_library();
    std::vector<std::pair<Family, Json>> specs;
    for (Family f : kAllFamilies) {
        for (int k = 0; k < 4; ++k) {
            Json s = fixture::spec_for(family_name(f));
            switch (f) {
                case Family::transformer: s["kva"] = 50 + 100 * k; break;
                case Family::induction: s["power_kw"] = 5 + 10 * k; break;
                case Family::synchronous: s["kva"] = 300 + 200 * k; break;
                case Family::dc: s["power_kw"] = 5 + 5 * k; break;
                case Family::srm: s["peak_current"] = 15 + 5 * k; break;
            }
            specs.emplace_back(f, normalize_spec(f, s));
        }
    }
    const auto dir = fixture::temp_dir("acceptance");
    workbench::ProjectStore store(dir / "data");
    const std::string pid = store.create_project(Json{{"name", "acceptance"}}).at("id");
    int exported = 0;
    for (const auto& [f, spec] : specs) {
        const Json constants = default_constants(f);
        const Material& m = find_material(lib, spec.at("material").get<std::string>());
        const auto a = dump_document(workbench::make_record("x", f, spec, constants, m, "", nullptr));
        const auto b = dump_document(workbench::make_record("x", f, spec, constants, m, "", nullptr));
        c.require(a == b, std::string(family_name(f)) + " result not byte-identical");
        const Json rec = store.run_design(pid, {{"machine_family", family_name(f)}, {"spec", spec}});
        c.require(rec.at("status") == "ok", "design failed");
        const Json doc = store.export_record(pid, rec.at("id"), "doc");
        const Json back = parse_json_text(dump_document(doc));
        try {
            c.require(workbench::revalidate_report(back) == f, "revalidated family differs");
            ++exported;
        } catch (const std::exception& e) {
            c.require(false, std::string("revalidate: ") + e.what());
        }
    }
    int cli_cases = 0;
    for (const auto& k : fixture::cli_matrix(dir)) {
        const auto r = fixture::run_cli(k.args);
        c.require(r.exit_code == k.expected_exit, "CLI '" + k.name + "' exit " + std::to_string(r.exit_code) +
                                                       " expected " + std::to_string(k.expected_exit));
        ++cli_cases;
    }
    return c.outcome(std::to_string(specs.size()) + " specs byte-identical, " + std::to_string(exported) +
                     " reports re-validated, " + std::to_string(cli_cases) + " CLI exit codes");
}

// 11. What-if lineage toward the torque target.
Outcome criterion_lineage() {
    Check c;
    const auto dir = fixture::temp_dir("lineage");
    workbench::ProjectStore store(dir);
    const std::string pid = store.create_project(Json{{"name", "lineage"}}).at("id");
    Json fields = default_constants(Family::srm);
    fields.erase("schema_version");
    fields.erase("family");
    const auto consts = srm::constants_from_json(fields, "constants");
    auto spec = fixture::srm_under_target();
    Json rec = store.run_design(pid, {{"machine_family", "srm"}, {"spec", srm::to_json(spec)}});
    double gap = rec.at("result").at("torque_gap");
    c.require(gap < 0, "starting spec is not under target");
    std::string gaps = fmt(gap);
    for (int step = 1; step <= 3; ++step) {
        const auto report = srm::design_srm(spec, steel(), consts);
        const auto sug = srm::suggest_refinement(report, spec, consts);
        if (sug.empty() || sug.front().parameter != "beta_s" || sug.front().direction != "increase") {
            c.require(false, "step " + std::to_string(step) + ": no beta_s increase suggested");
            break;
        }
        spec.beta_s = sug.front().suggested_value;
        const Json child = store.what_if(pid, rec.at("id"), Json{{"beta_s", spec.beta_s}});
        const double g = child.at("result").at("torque_gap");
        const auto direct = srm::design_srm(spec, steel(), consts);
        c.require(g == direct.torque_gap, "step " + std::to_string(step) + ": record differs from engine");
        c.require(std::abs(g) < std::abs(gap), "step " + std::to_string(step) + ": |torque_gap| not reduced");
        c.require(child.at("delta").at("torque_gap").at("closer_to_target").get<bool>(),
                  "delta does not report progress");
        gap = g;
        gaps += " -> " + fmt(g);
        rec = child;
    }
    return c.outcome("torque_gap " + gaps + " N·m");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "sizing algebra", criterion_sizing},
        {2, "magnetic circuit solver", criterion_solver},
        {3, "B-H interpolation", criterion_bh},
        {4, "torque-slip", criterion_torque_slip},
        {5, "OCC saturation", criterion_occ},
        {6, "Carter coefficient", criterion_carter},
        {7, "transformer", criterion_transformer},
        {8, "SRM inductance profile", criterion_srm_profile},
        {9, "SRM average torque", criterion_srm_torque},
        {10, "determinism and persistence", criterion_persistence},
        {11, "what-if lineage", criterion_lineage},
    };
    int failures = 0;
    for (const auto& k : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = k.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2d %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", k.id, k.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !o.ok;
    }
    return failures == 0 ? 0 : 1;
}
