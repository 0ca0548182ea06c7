#pragma once

#include <span>
#include <vector>

#include "emcad/materials.hpp"

namespace emcad {

enum class SegmentKind { airgap, iron, linear_iron };

// One element of a series magnetic circuit. Iron segments refer to a
// Material owned elsewhere; the material must outlive the segment.
struct CircuitSegment {
    double length = 0.0;  // m
    double area = 0.0;    // m²
    SegmentKind kind = SegmentKind::airgap;
    const Material* material = nullptr;  // iron only
    double relative_permeability = 1.0;  // linear_iron only

    static CircuitSegment air(double length, double area);
    static CircuitSegment iron(double length, double area, const Material& m);
    // Iron evaluated at a fixed relative permeability.
    static CircuitSegment linear(double length, double area, double mu_r);

    // MMF drop [At] when carrying `flux` [Wb].
    double mmf_drop(double flux) const;
    // l/(μA) for air and linear iron; for nonlinear iron, at the initial
    // permeability.
    double linear_reluctance() const;

    bool operator==(const CircuitSegment&) const = default;
};

struct CircuitSolution {
    double flux = 0.0;              // Wb
    std::vector<double> b;          // T, per segment
    std::vector<double> mmf_drop;   // At, per segment
    int iterations = 0;
};

struct SolverOptions {
    double b_cap = 2.5;        // initial bracket is [0, b_cap·min(area)]
    int max_iterations = 200;
    double rel_tolerance = 1e-9;
};

double total_mmf_drop(std::span<const CircuitSegment> segments, double flux);

// Finds the flux whose total MMF drop equals `applied_mmf` by bracketed
// bisection. The total drop is monotone in flux so the root is unique.
CircuitSolution solve_series_magnetic_circuit(std::span<const CircuitSegment> segments,
                                              double applied_mmf,
                                              const SolverOptions& options = {});

}  // namespace emcad
