#include "emcad/workbench.hpp"

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <ctime>
#include <random>
#include <regex>

#include "emcad/io.hpp"
#include "emcad/serialize.hpp"

namespace emcad::workbench {

namespace fs = std::filesystem;

Json error_json(std::string_view code, std::string_view message, std::string_view field_path) {
    return {{"code", code}, {"message", message}, {"field_path", field_path}};
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace {

std::string new_project_id() {
    static std::mutex m;
    static std::mt19937_64 rng{std::random_device{}()};
    std::lock_guard lock(m);
    char buf[24];
    std::snprintf(buf, sizeof buf, "p-%016" PRIx64, static_cast<std::uint64_t>(rng()));
    return buf;
}

bool valid_project_id(const std::string& id) {
    static const std::regex re("^p-[0-9a-f]{16}$");
    return std::regex_match(id, re);
}

ValidationError prefixed(const ValidationError& e, std::string_view prefix) {
    const std::string path = join_path(prefix, e.field_path());
    std::string msg = e.what();
    if (!e.field_path().empty() && msg.rfind(e.field_path(), 0) == 0) {
        msg = std::string(prefix) + "." + msg;
    }
    return ValidationError(path, msg);
}

const Json& find_record(const Json& project, const std::string& record_id) {
    for (const auto& r : project.at("records")) {
        if (r.at("id") == record_id) return r;
    }
    throw NotFound("record '" + record_id + "' not found in project " +
                   project.at("id").get<std::string>());
}

void require_ok(const Json& record) {
    if (record.at("status") != "ok") {
        throw Conflict("record '" + record.at("id").get<std::string>() + "' is a failed design");
    }
}

}  // namespace

Json make_record(const std::string& id, Family family, const Json& spec, const Json& constants,
                 const Material& material, const std::string& note, const Json* parent) {
    Json rec = {{"id", id},
                {"machine_family", family_name(family)},
                {"spec", spec},
                {"constants", constants},
                {"material", material_to_json(material)},
                {"note", note},
                {"parent_id", parent ? parent->at("id") : Json(nullptr)}};
    const MaterialLibrary lib{material};
    try {
        rec["result"] = run_family(family, spec, constants, lib);
        rec["status"] = "ok";
    } catch (const InfeasibleDesign& e) {
        rec["status"] = "failed";
        rec["result"] = nullptr;
        rec["diagnostics"] = error_json("infeasible_design", e.what(), "");
        rec["diagnostics"]["bound"] = e.bound();
    } catch (const DomainError& e) {
        rec["status"] = "failed";
        rec["result"] = nullptr;
        rec["diagnostics"] = error_json("engine_domain_error", e.what(), "");
    } catch (const SolverError& e) {
        rec["status"] = "failed";
        rec["result"] = nullptr;
        rec["diagnostics"] = error_json("solver_error", e.what(), "");
    }
    if (parent) rec["delta"] = delta_summary(*parent, rec);
    return rec;
}

Json delta_summary(const Json& parent, const Json& child) {
    Json inputs = Json::object();
    for (auto it = child.at("spec").begin(); it != child.at("spec").end(); ++it) {
        const Json& before = parent.at("spec").at(it.key());
        if (before != it.value()) inputs[it.key()] = {{"from", before}, {"to", it.value()}};
    }
    Json outputs = Json::object();
    const Json& a = parent.at("result");
    const Json& b = child.at("result");
    if (a.is_object() && b.is_object()) {
        for (auto it = b.begin(); it != b.end(); ++it) {
            if (!it.value().is_primitive()) continue;
            auto prev = a.find(it.key());
            if (prev != a.end() && *prev != it.value()) {
                outputs[it.key()] = {{"from", *prev}, {"to", it.value()}};
            }
        }
    }
    Json d = {{"changed_inputs", inputs}, {"changed_outputs", outputs}};
    if (parent.at("status") != child.at("status")) {
        d["status"] = {{"from", parent.at("status")}, {"to", child.at("status")}};
    }
    if (child.at("machine_family") == "srm" && a.is_object() && b.is_object()) {
        const double g0 = a.at("torque_gap").get<double>();
        const double g1 = b.at("torque_gap").get<double>();
        if (g0 != g1) {
            d["torque_gap"] = {{"from", g0},
                               {"to", g1},
                               {"change", g1 - g0},
                               {"abs_gap_change", std::abs(g1) - std::abs(g0)},
                               {"closer_to_target", std::abs(g1) < std::abs(g0)}};
        }
    }
    return d;
}

Json report_document(const Json& record) {
    require_ok(record);
    return {{"schema_version", kSchemaVersion},
            {"kind", "design_report"},
            {"record_id", record.at("id")},
            {"machine_family", record.at("machine_family")},
            {"spec", record.at("spec")},
            {"constants", record.at("constants")},
            {"material", record.at("material")},
            {"result", record.at("result")}};
}

Family revalidate_report(const Json& report) {
    ObjectReader r(report, "");
    const int version = r.integer("schema_version");
    if (version != kSchemaVersion) {
        throw ValidationError("schema_version", "schema_version: unsupported report version " +
                                                    std::to_string(version));
    }
    if (r.string("kind") != "design_report") {
        throw ValidationError("kind", "kind: expected 'design_report'");
    }
    r.string("record_id");
    const Family f = parse_family(r.string("machine_family"));
    const Json spec = normalize_spec(f, r.child("spec"), "spec");
    const Json constants = normalize_constants(f, r.child("constants"), "constants");
    const Material material = material_from_json(r.child("material"), "material");
    const Json& result = r.child("result");
    r.finish();
    if (spec != report.at("spec")) {
        throw ValidationError("spec", "spec: not in canonical form");
    }
    if (spec.at("material") != material.name()) {
        throw ValidationError("material.name", "material.name: does not match spec.material");
    }
    Json derived;
    try {
        derived = run_family(f, spec, constants, MaterialLibrary{material});
    } catch (const InfeasibleDesign& e) {
        throw ValidationError("result", std::string("result: spec no longer designs: ") + e.what());
    }
    if (derived != result) {
        throw ValidationError("result", "result: does not match the design re-derived from spec and constants");
    }
    return f;
}

std::string curve_csv(const Json& curve) {
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    };
    std::string out = quote(curve.at("x_label").get<std::string>()) + "," +
                      quote(curve.at("y_label").get<std::string>()) + "\n";
    const Json& xs = curve.at("x");
    const Json& ys = curve.at("y");
    char buf[64];
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", xs[i].get<double>(), ys[i].get<double>());
        out += buf;
    }
    return out;
}

std::map<std::string, std::string> csv_files(const Json& record) {
    require_ok(record);
    std::map<std::string, std::string> files;
    const Json& result = record.at("result");
    const Json& curves = result_curves(result);
    for (auto it = curves.begin(); it != curves.end(); ++it) {
        files[it.key() + ".csv"] = curve_csv(it.value());
    }
    if (record.at("machine_family") == "srm") {
        std::string t = "index,name,enclosure_fraction,solved_b,reluctance,inductance_contribution\n";
        char buf[256];
        for (const auto& p : result.at("flux_paths")) {
            std::snprintf(buf, sizeof buf, "%d,%s,%.17g,%.17g,%.17g,%.17g\n", p.at("index").get<int>(),
                          p.at("name").get<std::string>().c_str(), p.at("enclosure_fraction").get<double>(),
                          p.at("solved_b").get<double>(), p.at("reluctance").get<double>(),
                          p.at("inductance_contribution").get<double>());
            t += buf;
        }
        files["flux_paths.csv"] = t;
    }
    return files;
}

Json csv_bundle(const Json& record) {
    Json files = Json::object();
    for (const auto& [name, text] : csv_files(record)) files[name] = text;
    return {{"schema_version", kSchemaVersion},
            {"kind", "csv_bundle"},
            {"record_id", record.at("id")},
            {"files", files}};
}

// ---------------------------------------------------------------- ProjectStore

ProjectStore::ProjectStore(fs::path data_dir, MaterialLibrary library, std::string library_ref)
    : dir_(std::move(data_dir)),
      library_(std::move(library)),
      library_ref_(std::move(library_ref)),
      clock_(utc_timestamp) {
    std::error_code ec;
    fs::create_directories(dir_ / "projects", ec);
    if (ec) throw IoError("cannot create data directory '" + (dir_ / "projects").string() + "'");
}

fs::path ProjectStore::project_path(const std::string& id) const {
    if (!valid_project_id(id)) throw NotFound("project '" + id + "' not found");
    return dir_ / "projects" / (id + ".json");
}

std::mutex& ProjectStore::project_mutex(const std::string& id) {
    std::lock_guard lock(table_mutex_);
    auto& m = project_mutexes_[id];
    if (!m) m = std::make_unique<std::mutex>();
    return *m;
}

void ProjectStore::save(const Json& project) const {
    write_file_atomic(project_path(project.at("id").get<std::string>()), dump_document(project));
}

Json ProjectStore::create_project(const Json& body) {
    ObjectReader r(body, "");
    const std::string name = r.string("name");
    if (name.empty()) throw ValidationError("name", "name: must be non-empty");
    Json overrides = Json::object();
    if (const Json* o = r.optional_child("constants_overrides")) {
        ObjectReader orr(*o, "constants_overrides");
        for (auto it = o->begin(); it != o->end(); ++it) {
            const auto path = join_path("constants_overrides", it.key());
            const Family f = parse_family(it.key(), path);
            try {
                resolve_constants(f, it.value());
            } catch (const ValidationError& e) {
                // resolve_constants reports paths under "constants"
                const std::string family_path = "constants_overrides." + it.key();
                std::string field = e.field_path();
                std::string msg = e.what();
                if (field.rfind("constants", 0) == 0) {
                    field = family_path + field.substr(9);
                    if (msg.rfind("constants", 0) == 0) msg = family_path + msg.substr(9);
                    throw ValidationError(field, msg);
                }
                throw prefixed(e, family_path);
            }
            overrides[it.key()] = it.value();
        }
    }
    r.finish();
    const std::string now = clock_();
    Json project = {{"schema_version", kSchemaVersion},
                    {"kind", "project"},
                    {"id", new_project_id()},
                    {"name", name},
                    {"created", now},
                    {"modified", now},
                    {"material_library_ref", library_ref_},
                    {"constants_overrides", overrides},
                    {"records", Json::array()}};
    save(project);
    return project;
}

Json ProjectStore::load_project(const std::string& id) const {
    const auto path = project_path(id);
    if (!fs::exists(path)) throw NotFound("project '" + id + "' not found");
    return parse_json_text(read_text_file(path));
}

std::vector<Json> ProjectStore::list_projects() const {
    std::vector<Json> out;
    for (const auto& entry : fs::directory_iterator(dir_ / "projects")) {
        if (entry.path().extension() != ".json") continue;
        const std::string id = entry.path().stem().string();
        if (!valid_project_id(id)) continue;
        try {
            const Json p = load_project(id);
            out.push_back({{"id", p.at("id")},
                           {"name", p.at("name")},
                           {"created", p.at("created")},
                           {"modified", p.at("modified")},
                           {"record_count", p.at("records").size()}});
        } catch (const std::exception&) {
            // removed or unreadable between listing and reading
        }
    }
    std::sort(out.begin(), out.end(), [](const Json& a, const Json& b) { return a.at("id") < b.at("id"); });
    return out;
}

void ProjectStore::delete_project(const std::string& id) {
    std::lock_guard lock(project_mutex(id));
    const auto path = project_path(id);
    std::error_code ec;
    if (!fs::remove(path, ec)) throw NotFound("project '" + id + "' not found");
}

Json ProjectStore::append_record(const std::string& project_id, Family family, const Json& spec,
                                 const Json& constants, const std::string& note, const Json* parent) {
    // Caller holds the project mutex.
    Json project = load_project(project_id);
    const std::string material_name = spec.at("material").get<std::string>();
    const Material* material = nullptr;
    for (const auto& m : library_) {
        if (m.name() == material_name) material = &m;
    }
    if (!material) {
        throw ValidationError("spec.material", "spec.material: unknown material '" + material_name + "'");
    }
    const std::string id = "r" + std::to_string(project.at("records").size() + 1);
    Json rec = make_record(id, family, spec, constants, *material, note, parent);
    project["records"].push_back(rec);
    project["modified"] = clock_();
    save(project);
    return rec;
}

Json ProjectStore::run_design(const std::string& project_id, const Json& body) {
    ObjectReader r(body, "");
    const Family f = parse_family(r.string("machine_family"));
    const Json spec = normalize_spec(f, r.child("spec"), "spec");
    std::string note;
    if (r.has("note")) note = r.string("note");
    r.finish();

    std::lock_guard lock(project_mutex(project_id));
    const Json project = load_project(project_id);
    const Json& overrides = project.at("constants_overrides");
    auto it = overrides.find(family_name(f));
    const Json constants = resolve_constants(f, it == overrides.end() ? Json(nullptr) : *it);
    return append_record(project_id, f, spec, constants, note, nullptr);
}

Json ProjectStore::what_if(const std::string& project_id, const std::string& parent_id, const Json& patch) {
    std::lock_guard lock(project_mutex(project_id));
    const Json project = load_project(project_id);
    const Json parent = find_record(project, parent_id);
    require_ok(parent);
    const Family f = parse_family(parent.at("machine_family").get<std::string>());
    Json spec = parent.at("spec");
    merge_patch(spec, patch, "spec", false);
    spec = normalize_spec(f, spec, "spec");
    return append_record(project_id, f, spec, parent.at("constants"),
                         "what-if on " + parent_id, &parent);
}

Json ProjectStore::record(const std::string& project_id, const std::string& record_id) const {
    return find_record(load_project(project_id), record_id);
}

Json ProjectStore::curve(const std::string& project_id, const std::string& record_id,
                         const std::string& curve_name) const {
    const Json rec = record(project_id, record_id);
    require_ok(rec);
    const Json& curves = result_curves(rec.at("result"));
    auto it = curves.find(curve_name);
    if (it == curves.end()) {
        throw NotFound("record '" + record_id + "' has no curve '" + curve_name + "'");
    }
    return *it;
}

Json ProjectStore::export_record(const std::string& project_id, const std::string& record_id,
                                 const std::string& format) const {
    const Json rec = record(project_id, record_id);
    if (format == "doc") return report_document(rec);
    if (format == "csv") return csv_bundle(rec);
    throw ValidationError("format", "format: expected 'doc' or 'csv'");
}

}  // namespace emcad::workbench
