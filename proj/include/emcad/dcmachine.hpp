#pragma once

#include <string>

#include "emcad/materials.hpp"
#include "emcad/sizing.hpp"

namespace emcad::dc {

enum class Winding { lap, wave };

struct Spec {
    double power_kw = 0.0;
    double voltage = 0.0;
    double speed_rpm = 0.0;
    int poles = 4;
    Winding winding = Winding::lap;
    std::string material;

    bool operator==(const Spec&) const = default;
};

void validate(const Spec& spec);

struct Constants {
    double b_av = 0.5;
    double ac = 25000.0;
    double b_av_max = 0.9;
    double ac_min = 10000.0;
    double ac_max = 50000.0;
    double l_over_tau = 1.0;
    double target_slot_pitch = 0.025;  // m
    int max_conductors_per_slot = 40;

    bool operator==(const Constants&) const = default;
};

void validate(const Constants& c);

struct Design {
    double output_coefficient = 0.0;  // kW per m³·rps
    double d2l = 0.0;
    MainDimensions main;
    Loadings loadings;
    double flux_per_pole = 0.0;
    int parallel_paths = 0;
    int armature_conductors = 0;
    int slots = 0;
    int conductors_per_slot = 0;
    double armature_current = 0.0;
    double conductor_current = 0.0;
    double total_ampere_conductors = 0.0;
    double ac_actual = 0.0;
    double emf_check = 0.0;
    double emf_resolution = 0.0;  // EMF of one conductor, V

    bool operator==(const Design&) const = default;
};

Design design_dc(const Spec& spec, const Material& material, const Constants& constants);

// E = φ·Z·N·p / (60·a)
double armature_emf(double flux_per_pole, int conductors, double speed_rpm, int poles,
                    int parallel_paths);

int parallel_paths_for(Winding w, int poles);

}  // namespace emcad::dc
