#pragma once

// Machine-family dispatch over JSON documents: the layer shared by the
// workbench, the HTTP API and the CLI.

#include <array>
#include <string>
#include <string_view>

#include "emcad/json_fields.hpp"
#include "emcad/materials.hpp"
#include "emcad/parallel.hpp"

namespace emcad {

enum class Family { transformer, induction, synchronous, dc, srm };

inline constexpr std::array<Family, 5> kAllFamilies = {
    Family::transformer, Family::induction, Family::synchronous, Family::dc, Family::srm};

std::string_view family_name(Family f);
// ValidationError(path) for an unknown name.
Family parse_family(std::string_view name, const std::string& path = "machine_family");

// Constants document: {"schema_version": 1, "family": "...", <fields>}.
Json default_constants(Family f);
// Merges a sparse overrides object (same shape, header optional) over the
// defaults; unknown fields are rejected. Returns the full validated document.
Json resolve_constants(Family f, const Json& overrides);
// Parses and validates a full constants document; returns it normalized.
Json normalize_constants(Family f, const Json& doc, const std::string& path = "constants");

// Strict spec parse + field validation, re-serialized with defaults filled.
Json normalize_spec(Family f, const Json& spec, const std::string& path = "spec");

// Runs the family engine. Throws ValidationError for bad specs and
// InfeasibleDesign when the design breaks a bound. The material is looked up
// by the spec's "material" name.
Json run_family(Family f, const Json& spec, const Json& constants, const MaterialLibrary& lib,
                Execution exec = Execution::parallel);

// Every CurveSeries in a result, keyed by curve name.
const Json& result_curves(const Json& result);

}  // namespace emcad
