#pragma once

// Project persistence and design sessions. A project is one JSON document
// under <data_dir>/projects/<id>.json holding an append-only list of design
// records; what-if records link to their parent.

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "emcad/families.hpp"
#include "emcad/json_fields.hpp"
#include "emcad/materials.hpp"

namespace emcad::workbench {

class NotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Request is well-formed but not applicable to the resource's state
// (what-if on a failed record, exporting a failed record...).
class Conflict : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {code, message, field_path}
Json error_json(std::string_view code, std::string_view message, std::string_view field_path);

// Self-contained report for one successful record: spec, constants
// snapshot, material, result (including every curve).
Json report_document(const Json& record);

// Re-derives the result from the report's spec, constants and material and
// checks it matches; ValidationError on any schema problem or mismatch.
// Returns the machine family.
Family revalidate_report(const Json& report);

// One CSV per curve (and the SRM flux-path table), keyed by file name.
std::map<std::string, std::string> csv_files(const Json& record);
std::string curve_csv(const Json& curve);

// {"schema_version", "kind": "csv_bundle", "record_id", "files": {...}}
Json csv_bundle(const Json& record);

// Changes between a parent and a child record.
Json delta_summary(const Json& parent, const Json& child);

class ProjectStore {
public:
    using Clock = std::function<std::string()>;  // ISO-8601 UTC timestamp

    explicit ProjectStore(std::filesystem::path data_dir,
                          MaterialLibrary library = bundled_material_library(),
                          std::string library_ref = "bundled");

    void set_clock(Clock clock) { clock_ = std::move(clock); }
    const MaterialLibrary& library() const { return library_; }
    const std::string& library_ref() const { return library_ref_; }

    // body: {"name": ..., "constants_overrides": {family: sparse patch}}
    Json create_project(const Json& body);
    Json load_project(const std::string& id) const;
    std::vector<Json> list_projects() const;  // {id, name, created, modified, record_count}
    void delete_project(const std::string& id);

    // body: {"machine_family", "spec", "note"?}. ValidationError for bad
    // input; engine infeasibility becomes a failed record.
    Json run_design(const std::string& project_id, const Json& body);
    // patch: sparse spec fields merged over the parent's spec.
    Json what_if(const std::string& project_id, const std::string& parent_id, const Json& patch);

    Json record(const std::string& project_id, const std::string& record_id) const;
    Json curve(const std::string& project_id, const std::string& record_id,
               const std::string& curve_name) const;
    // format: "doc" | "csv"
    Json export_record(const std::string& project_id, const std::string& record_id,
                       const std::string& format) const;

private:
    std::filesystem::path project_path(const std::string& id) const;
    std::mutex& project_mutex(const std::string& id);
    void save(const Json& project) const;
    Json append_record(const std::string& project_id, Family family, const Json& spec,
                       const Json& constants, const std::string& note, const Json* parent);

    std::filesystem::path dir_;
    MaterialLibrary library_;
    std::string library_ref_;
    Clock clock_;
    std::mutex table_mutex_;
    std::map<std::string, std::unique_ptr<std::mutex>> project_mutexes_;
};

// Shared by the store and the CLI: runs one design and returns a record
// ("status" ok with "result", or failed with "diagnostics").
Json make_record(const std::string& id, Family family, const Json& spec, const Json& constants,
                 const Material& material, const std::string& note, const Json* parent);

std::string utc_timestamp();

}  // namespace emcad::workbench
