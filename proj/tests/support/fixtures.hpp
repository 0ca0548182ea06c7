#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "emcad/json_fields.hpp"
#include "emcad/srm.hpp"
#include "emcad/transformer.hpp"

namespace fixture {

inline constexpr const char* kSteel = "M270_35A";

emcad::Json transformer_spec();
emcad::Json induction_spec();
emcad::Json synchronous_spec();
emcad::Json dc_spec();
emcad::Json srm_spec();
emcad::Json spec_for(std::string_view family);

emcad::srm::Spec srm_base();
// Under-target SRM used by the what-if lineage checks.
emcad::srm::Spec srm_under_target();

// ≥ 50 feasible SRM specs across 6/4 and 8/6 configurations.
std::vector<emcad::srm::Spec> srm_corpus();

// 50 transformer specs: kVA, voltages, phases, form and connection varied.
std::vector<emcad::transformer::Spec> transformer_corpus();

// Fresh empty directory under the system temp dir.
std::filesystem::path temp_dir(const std::string& tag);

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs the built CLI with `args` (shell-quoted by the caller).
RunResult run_cli(const std::string& args);

struct CliCase {
    std::string name;
    std::string args;
    int expected_exit = 0;
};

// Exit-code fixture matrix; writes its input files under `dir`.
std::vector<CliCase> cli_matrix(const std::filesystem::path& dir);

void write_text(const std::filesystem::path& p, const std::string& text);

}  // namespace fixture
