#include "fixtures.hpp"

#include <sys/wait.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "emcad/io.hpp"
#include "emcad/units.hpp"

namespace fixture {

using emcad::Json;

Json transformer_spec() {
    return {{"kva", 100},       {"hv_voltage", 11000}, {"lv_voltage", 415},     {"frequency", 50},
            {"phases", 3},      {"core_form", "core"}, {"connection", "star"}, {"material", kSteel}};
}

Json induction_spec() {
    return {{"power_kw", 10}, {"line_voltage", 415}, {"frequency", 50},
            {"phases", 3},    {"poles", 4},          {"material", kSteel}};
}

Json synchronous_spec() {
    return {{"kva", 500},      {"line_voltage", 3300},     {"frequency", 50},
            {"speed_rpm", 300}, {"rotor_type", "salient"}, {"material", kSteel}};
}

Json dc_spec() {
    return {{"power_kw", 10}, {"voltage", 220},    {"speed_rpm", 1200},
            {"poles", 4},     {"winding", "lap"}, {"material", kSteel}};
}

emcad::srm::Spec srm_base() {
    emcad::srm::Spec s;
    s.target_kind = emcad::srm::TargetKind::power;
    s.target_value = 5.0;
    s.speed_rpm = 1500.0;
    s.dc_voltage = 300.0;
    s.phases = 3;
    s.stator_poles = 6;
    s.rotor_poles = 4;
    s.beta_s = emcad::deg_to_rad(30.0);
    s.beta_r = emcad::deg_to_rad(34.0);
    s.air_gap = 0.5e-3;
    s.peak_current = 20.0;
    s.material = kSteel;
    return s;
}

emcad::srm::Spec srm_under_target() {
    auto s = srm_base();
    s.beta_r = emcad::deg_to_rad(40.0);
    s.peak_current = 18.0;
    return s;
}

Json srm_spec() {
    const auto s = srm_base();
    return {{"target_kind", "power"},      {"target_value", s.target_value}, {"speed_rpm", s.speed_rpm},
            {"dc_voltage", s.dc_voltage},  {"phases", s.phases},             {"stator_poles", s.stator_poles},
            {"rotor_poles", s.rotor_poles}, {"beta_s", s.beta_s},            {"beta_r", s.beta_r},
            {"air_gap", s.air_gap},        {"peak_current", s.peak_current}, {"material", s.material}};
}

Json spec_for(std::string_view family) {
    if (family == "transformer") return transformer_spec();
    if (family == "induction") return induction_spec();
    if (family == "synchronous") return synchronous_spec();
    if (family == "dc") return dc_spec();
    return srm_spec();
}

std::vector<emcad::srm::Spec> srm_corpus() {
    std::vector<emcad::srm::Spec> out;
    const double powers[] = {1.0, 3.0, 7.5, 15.0};
    const double gaps[] = {0.3e-3, 0.6e-3};
    for (int config = 0; config < 2; ++config) {
        const int ns = config == 0 ? 6 : 8;
        const int nr = config == 0 ? 4 : 6;
        const int m = config == 0 ? 3 : 4;
        // arcs (deg): β_s from the self-starting minimum upward, β_r ≥ β_s
        const double min_s = 360.0 / (m * nr);
        const double pitch = 360.0 / nr;
        for (double p : powers) {
            for (double g : gaps) {
                for (int a = 0; a < 4; ++a) {
                    auto s = srm_base();
                    s.phases = m;
                    s.stator_poles = ns;
                    s.rotor_poles = nr;
                    s.target_value = p;
                    s.air_gap = g;
                    s.beta_s = emcad::deg_to_rad(min_s + 1.0 + a);
                    s.beta_r = emcad::deg_to_rad(std::min(min_s + 4.0 + 1.5 * a, pitch - (min_s + 2.0 + a)));
                    s.peak_current = 5.0 + 4.0 * p;
                    s.speed_rpm = 1000.0 + 250.0 * a;
                    out.push_back(s);
                }
            }
        }
    }
    return out;
}

std::vector<emcad::transformer::Spec> transformer_corpus() {
    using namespace emcad::transformer;
    std::vector<Spec> out;
    const double kvas[] = {5, 16, 25, 63, 100, 160, 250, 400, 630, 1000};
    int k = 0;
    for (double kva : kvas) {
        for (int v = 0; v < 5; ++v, ++k) {
            Spec s;
            s.kva = kva;
            s.frequency = (k % 2 == 0) ? 50.0 : 60.0;
            s.material = (k % 3 == 0) ? "M19_29G" : kSteel;
            switch (v) {
                case 0: s.phases = 3; s.core_form = CoreForm::core; s.connection = Connection::star;
                        s.hv_voltage = 11000; s.lv_voltage = 415; break;
                case 1: s.phases = 3; s.core_form = CoreForm::core; s.connection = Connection::delta;
                        s.hv_voltage = 6600; s.lv_voltage = 440; break;
                case 2: s.phases = 3; s.core_form = CoreForm::shell; s.connection = Connection::star;
                        s.hv_voltage = 3300; s.lv_voltage = 400; break;
                case 3: s.phases = 1; s.core_form = CoreForm::core; s.connection = Connection::single;
                        s.hv_voltage = 2200; s.lv_voltage = 230; break;
                default: s.phases = 1; s.core_form = CoreForm::shell; s.connection = Connection::single;
                         s.hv_voltage = 1100; s.lv_voltage = 110; break;
            }
            out.push_back(s);
        }
    }
    return out;
}

std::filesystem::path temp_dir(const std::string& tag) {
    static std::atomic<int> n{0};
    auto p = std::filesystem::temp_directory_path() /
             ("emcad_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(n++));
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
}

RunResult run_cli(const std::string& args) {
    const auto dir = temp_dir("cli_io");
    const auto out = dir / "stdout";
    const auto err = dir / "stderr";
    const std::string cmd = std::string("'") + EMCAD_CLI_PATH + "' " + args + " >'" + out.string() + "' 2>'" +
                            err.string() + "'";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = emcad::read_text_file(out);
    r.err = emcad::read_text_file(err);
    std::filesystem::remove_all(dir);
    return r;
}

std::vector<CliCase> cli_matrix(const std::filesystem::path& dir) {
    auto q = [](const std::filesystem::path& p) { return "'" + p.string() + "'"; };
    const auto good = dir / "srm.json";
    write_text(good, srm_spec().dump());
    auto neg = transformer_spec();
    neg["kva"] = -5;
    const auto bad_kva = dir / "neg_kva.json";
    write_text(bad_kva, neg.dump());
    auto arcs = srm_spec();
    arcs["beta_s"] = 0.8;
    const auto infeasible = dir / "infeasible.json";
    write_text(infeasible, arcs.dump());
    const auto syntax = dir / "syntax.json";
    write_text(syntax, "{\"kva\": ");
    const auto unknown = dir / "unknown_constants.json";
    write_text(unknown, R"({"k7": 1})");
    const auto missing = dir / "does_not_exist.json";
    const auto blocked = dir / "no_such_dir" / "out.json";

    return {
        {"design ok", "design --family srm --spec " + q(good), 0},
        {"validate ok", "validate --family srm --spec " + q(good), 0},
        {"materials ok", "materials", 0},
        {"bh curve ok", std::string("curves bh --material ") + kSteel, 0},
        {"negative kva", "validate --family transformer --spec " + q(bad_kva), 1},
        {"syntax error", "design --family transformer --spec " + q(syntax), 1},
        {"unknown family", "design --family stepper --spec " + q(good), 1},
        {"unknown constant", "design --family srm --spec " + q(good) + " --constants " + q(unknown), 1},
        {"unknown subcommand", "frobnicate", 1},
        {"unknown material", "curves bh --material nope", 1},
        {"infeasible arcs", "design --family srm --spec " + q(infeasible), 2},
        {"missing spec file", "design --family srm --spec " + q(missing), 3},
        {"unwritable output", "design --family srm --spec " + q(good) + " --out " + q(blocked), 3},
    };
}

}  // namespace fixture
