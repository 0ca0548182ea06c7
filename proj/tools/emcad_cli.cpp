// emcad: batch design, curve export, material listing, spec/report
// validation and the HTTP API server.
//
// Exit codes: 0 ok, 1 validation error, 2 infeasible design, 3 I/O error.

#include <CLI11.hpp>

#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "emcad/error.hpp"
#include "emcad/families.hpp"
#include "emcad/http_api.hpp"
#include "emcad/io.hpp"
#include "emcad/serialize.hpp"
#include "emcad/workbench.hpp"

namespace fs = std::filesystem;
using namespace emcad;

namespace {

enum Exit { kOk = 0, kValidation = 1, kInfeasible = 2, kIo = 3 };

struct Options {
    std::string family;
    std::string spec;
    std::string constants;
    std::string materials;
    std::string out;
    std::string format = "doc";
    std::string material;
    std::string curve;
    std::string report;
    std::string data_dir;
    std::string host = "127.0.0.1";
    int port = 8080;
};

MaterialLibrary library_for(const Options& o) {
    if (o.materials.empty()) return bundled_material_library();
    return load_material_library(read_text_file(o.materials));
}

Json read_json(const std::string& path) { return parse_json_text(read_text_file(path)); }

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
    } else {
        write_file_atomic(o.out, text);
    }
}

Json constants_for(Family f, const Options& o) {
    return resolve_constants(f, o.constants.empty() ? Json(nullptr) : read_json(o.constants));
}

// Runs the spec file through the engine; returns the record.
Json run_spec(const Options& o, Family& family) {
    if (o.family.empty()) throw ValidationError("family", "--family is required");
    if (o.spec.empty()) throw ValidationError("spec", "--spec is required");
    family = parse_family(o.family, "family");
    const Json spec = normalize_spec(family, read_json(o.spec), "");
    const Json constants = constants_for(family, o);
    const auto lib = library_for(o);
    const Material& m = find_material(lib, spec.at("material").get<std::string>());
    return workbench::make_record("cli", family, spec, constants, m, "", nullptr);
}

void fail_from_record(const Json& rec) {
    const Json& d = rec.at("diagnostics");
    if (d.at("code") == "infeasible_design") {
        throw InfeasibleDesign(d.value("bound", ""), d.at("message").get<std::string>());
    }
    throw InfeasibleDesign("", d.at("message").get<std::string>());
}

int cmd_design(const Options& o) {
    Family family{};
    const Json rec = run_spec(o, family);
    if (rec.at("status") != "ok") fail_from_record(rec);
    if (o.format == "csv") {
        const auto files = workbench::csv_files(rec);
        if (o.out.empty()) {
            std::cout << dump_document(workbench::csv_bundle(rec));
        } else {
            fs::create_directories(o.out);
            for (const auto& [name, text] : files) write_file_atomic(fs::path(o.out) / name, text);
        }
    } else {
        emit(o, dump_document(workbench::report_document(rec)));
    }
    return kOk;
}

int cmd_curves(const Options& o) {
    Json curve;
    if (o.curve == "bh") {
        if (o.material.empty()) throw ValidationError("material", "curves bh needs --material");
        const auto lib = library_for(o);
        curve = curve_to_json(find_material(lib, o.material).bh_curve());
    } else {
        Family family{};
        const Json rec = run_spec(o, family);
        if (rec.at("status") != "ok") fail_from_record(rec);
        const Json& curves = result_curves(rec.at("result"));
        auto it = curves.find(o.curve);
        if (it == curves.end()) {
            std::string names;
            for (auto c = curves.begin(); c != curves.end(); ++c) names += (names.empty() ? "" : ", ") + c.key();
            throw ValidationError("curve", "no curve '" + o.curve + "' for family " + o.family +
                                               " (available: " + (names.empty() ? "none" : names) + ")");
        }
        curve = *it;
    }
    emit(o, o.format == "csv" ? workbench::curve_csv(curve) : dump_document(curve));
    return kOk;
}

int cmd_materials(const Options& o) {
    const auto lib = library_for(o);
    if (o.format == "doc") {
        emit(o, dump_document(material_library_to_json(lib)));
        return kOk;
    }
    std::string text = "name,density,stacking_factor,initial_relative_permeability,saturation_knee\n";
    char buf[256];
    for (const auto& m : lib) {
        std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g\n", m.name().c_str(), m.density(),
                      m.stacking_factor(), m.initial_relative_permeability(), m.saturation_knee());
        text += buf;
    }
    emit(o, text);
    return kOk;
}

int cmd_validate(const Options& o) {
    const std::string path = !o.report.empty() ? o.report : o.spec;
    if (path.empty()) throw ValidationError("spec", "--spec or --report is required");
    const Json doc = read_json(path);
    if (doc.is_object() && doc.value("kind", "") == "design_report") {
        const Family f = workbench::revalidate_report(doc);
        if (!o.family.empty() && parse_family(o.family, "family") != f) {
            throw ValidationError("machine_family", "machine_family: report is for " +
                                                        std::string(family_name(f)));
        }
        std::cout << "ok: " << family_name(f) << " report re-derives exactly\n";
        return kOk;
    }
    if (o.family.empty()) throw ValidationError("family", "--family is required to validate a spec");
    const Family f = parse_family(o.family, "family");
    const Json spec = normalize_spec(f, doc, "");
    if (!o.constants.empty()) constants_for(f, o);
    find_material(library_for(o), spec.at("material").get<std::string>());
    std::cout << "ok: valid " << family_name(f) << " spec\n";
    return kOk;
}

http::ApiServer* g_server = nullptr;

int cmd_serve(const Options& o) {
    std::string dir = o.data_dir;
    if (dir.empty()) {
        const char* env = std::getenv("EMCAD_DATA_DIR");
        dir = env && *env ? env : "emcad-data";
    }
    workbench::ProjectStore store(dir, library_for(o), o.materials.empty() ? "bundled" : o.materials);
    http::ApiServer server(store);
    const int port = server.bind(o.host, o.port);
    g_server = &server;
    std::signal(SIGINT, [](int) {
        if (g_server) g_server->stop();
    });
    std::signal(SIGTERM, [](int) {
        if (g_server) g_server->stop();
    });
    std::cerr << "emcad serving /api/v1 on http://" << o.host << ":" << port << " (data: " << dir << ")\n";
    server.listen();
    g_server = nullptr;
    return kOk;
}

void report_error(const Options& o, std::string_view code, const std::string& message,
                  const std::string& field_path, const std::string& bound = "") {
    if (o.format == "doc") {
        Json e = workbench::error_json(code, message, field_path);
        if (!bound.empty()) e["bound"] = bound;
        std::cerr << e.dump() << "\n";
    } else {
        std::cerr << "error: " << message << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Electrical machine design calculator"};
    app.require_subcommand(1, 1);

    auto add_common = [&](CLI::App* s) {
        s->add_option("--materials", o.materials, "Material library file (default: bundled)");
        s->add_option("--out", o.out, "Output path (default: stdout)");
        s->add_option("--format", o.format, "doc or csv")->check(CLI::IsMember({"doc", "csv"}));
    };
    auto add_design_inputs = [&](CLI::App* s) {
        s->add_option("--family", o.family, "transformer | induction | synchronous | dc | srm");
        s->add_option("--spec", o.spec, "Spec document");
        s->add_option("--constants", o.constants, "Constants overrides merged over the family defaults");
    };

    auto* design = app.add_subcommand("design", "Run a design from a spec file");
    add_common(design);
    add_design_inputs(design);

    auto* curves = app.add_subcommand("curves", "Export one curve (bh, or a design curve name)");
    curves->add_option("curve", o.curve, "Curve name")->required();
    curves->add_option("--material", o.material, "Material for the bh curve");
    add_common(curves);
    add_design_inputs(curves);

    auto* materials = app.add_subcommand("materials", "List the material library");
    add_common(materials);

    auto* validate = app.add_subcommand("validate", "Validate a spec, or re-derive a design report");
    add_common(validate);
    add_design_inputs(validate);
    validate->add_option("--report", o.report, "Design report document");

    auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
    serve->add_option("--port", o.port, "Port (0 = any free port)");
    serve->add_option("--host", o.host, "Bind address");
    serve->add_option("--data-dir", o.data_dir, "Project directory (default: $EMCAD_DATA_DIR)");
    serve->add_option("--materials", o.materials, "Material library file (default: bundled)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kValidation;
    }
    // csv is the natural default for curve export
    if (curves->parsed() && curves->count("--format") == 0) o.format = "csv";
    if (materials->parsed() && materials->count("--format") == 0) o.format = "csv";

    try {
        if (design->parsed()) return cmd_design(o);
        if (curves->parsed()) return cmd_curves(o);
        if (materials->parsed()) return cmd_materials(o);
        if (validate->parsed()) return cmd_validate(o);
        if (serve->parsed()) return cmd_serve(o);
    } catch (const ValidationError& e) {
        report_error(o, "validation_error", e.what(), e.field_path());
        return kValidation;
    } catch (const InfeasibleDesign& e) {
        report_error(o, "infeasible_design", e.what(), "", e.bound());
        return kInfeasible;
    } catch (const IoError& e) {
        report_error(o, "io_error", e.what(), "");
        return kIo;
    } catch (const fs::filesystem_error& e) {
        report_error(o, "io_error", e.what(), "");
        return kIo;
    } catch (const std::exception& e) {
        report_error(o, "internal_error", e.what(), "");
        return kInfeasible;
    }
    return kOk;
}
