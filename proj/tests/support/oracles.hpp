#pragma once

// Reference computations written independently of the engine code paths
// (linear scans instead of binary search, dense sweeps instead of
// bisection, numeric loop integration instead of the closed form).

#include <functional>
#include <vector>

#include "emcad/magnetic_circuit.hpp"
#include "emcad/materials.hpp"

namespace oracle {

// H on the B-H knots by linear scan; slope 1/μ0 above the last knot.
double h_of_b(const emcad::Material& m, double b);

// Total MMF drop of a series circuit at flux φ.
double total_drop(const std::vector<emcad::CircuitSegment>& segs, double flux);

// Flux for `mmf` from a uniform sweep of `points` samples over [0, phi_max],
// refined by linear interpolation between the bracketing samples.
double sweep_flux(const std::vector<emcad::CircuitSegment>& segs, double mmf, double phi_max,
                  long points);

// Index of the largest value (first on ties).
std::size_t argmax(const std::vector<double>& ys);

// Real cube root by bisection.
double cube_root(double v);

// Work per stroke ∮ i dλ of the idealized energy-conversion loop: current
// ramps 0→i at the unaligned angle, the rotor turns to alignment at
// constant current (λ = L(θ)·i from the profile), current ramps i→0 at
// alignment. `steps` sets the resolution of each leg.
double loop_work(const std::function<double(double)>& inductance, double theta_unaligned,
                 double theta_aligned, double current, int steps);

}  // namespace oracle
