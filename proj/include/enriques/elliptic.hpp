#pragma once

#include <string>
#include <vector>

#include "enriques/curves.hpp"

namespace enriques {

enum class DynkinFamily { A, D, E };

// Extended Dynkin diagram label: family + subscript, e.g. {A,7} for the
// affine A7 diagram on 8 vertices.
struct DynkinLabel {
    DynkinFamily family = DynkinFamily::A;
    int n = 0;
    bool operator==(const DynkinLabel&) const = default;
    auto operator<=>(const DynkinLabel&) const = default;
    std::string str() const;  // "A~7", "D~4", "E~8"
};

// An elliptic configuration supported on a curve system: a connected support
// whose restricted Gram matrix is negative semidefinite of corank exactly 1,
// together with the strictly positive primitive kernel vector.  Those
// multiplicities are the Kodaira fiber multiplicities and the class
// sum(m_i * R_i) is isotropic and orthogonal to every support curve.
struct EllipticConfiguration {
    std::vector<int> support;         // sorted curve indices
    std::vector<Coord> multiplicities;  // aligned with support
    LatticeVector klass;
    DynkinLabel type;
};

struct EnumerateOptions {
    int max_support = 10;
    bool prune = true;     // positive-inertia branch pruning (sound by eigenvalue interlacing)
    bool parallel = true;  // fan out over root vertices; output order is canonical either way
};

// Complete duplicate-free list of elliptic configurations with support in
// the system, canonically ordered by support tuple.  Connected supports are
// generated by exclusive-neighborhood extension, one canonical construction
// path per subset.
std::vector<EllipticConfiguration> enumerate_configurations(const CurveSystem& system,
                                                            EnumerateOptions opts = {});

// Structural label of a configuration: cycles (including the double-edge
// pair) are A~, trees are D~/E~ by branch-vertex count and arm lengths.
// Cross-checked against the affine marks table; throws InconsistentTypeError
// if structure and multiplicities disagree.
DynkinLabel label_type(const CurveSystem& system, const std::vector<int>& support,
                       const std::vector<Coord>& multiplicities);

// The Kodaira multiplicity multiset of an affine diagram (unordered).
std::vector<Coord> affine_marks(const DynkinLabel& label);

// Re-checks every invariant of every configuration against the system;
// throws on the first violation.  Used by the test suites.
void audit_configurations(const CurveSystem& system,
                          const std::vector<EllipticConfiguration>& configs);

}  // namespace enriques
