#pragma once

#include <string>
#include <vector>

#include "enriques/lattice.hpp"

namespace enriques {

// A finite ordered system of smooth-rational-curve classes with its cached
// intersection matrix.  Construction validates that every class squares to
// -2, distinct classes pair non-negatively, and there are no duplicates.
// Immutable after construction.
struct CurveSystem {
    std::vector<LatticeVector> curves;
    std::vector<std::string> labels;
    IntMat intersections;

    int size() const { return static_cast<int>(curves.size()); }
    const LatticeVector& curve(int i) const { return curves[static_cast<size_t>(i)]; }
    const std::string& label(int i) const { return labels[static_cast<size_t>(i)]; }

    // index of a vector / label, or -1
    int find(const LatticeVector& v) const;
    int find_label(const std::string& l) const;

    // subsystem with the given curve indices, order preserved
    CurveSystem subsystem(const std::vector<int>& indices) const;
};

// Validates and builds the system.  Labels default to "C0", "C1", ...
// Order-preserving.  Throws NotMinusTwoError, NegativePairingError,
// DuplicateCurveError.
CurveSystem build_system(const std::vector<LatticeVector>& vectors,
                         std::vector<std::string> labels = {});

// True iff the curve classes span the full rank-10 lattice over Q.
bool spans_full_rank(const CurveSystem& system);

}  // namespace enriques
