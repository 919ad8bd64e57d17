#pragma once

#include <vector>

#include "enriques/elliptic.hpp"

namespace enriques {

// F: the configuration was a full fiber (its class was 2-divisible and has
// been halved).  HF: the configuration itself is the half-fiber.
enum class FiberKind { F, HF };

inline const char* to_string(FiberKind k) { return k == FiberKind::F ? "F" : "HF"; }

struct HalfFiberClass {
    LatticeVector klass;
    FiberKind kind = FiberKind::HF;
    EllipticConfiguration source;
};

// Lattice-level fiber/half-fiber dichotomy: 2-divisible configuration
// classes are fibers (halved), the rest are half-fibers.  Throws
// DoubleDivisibleError if the halved class is divisible again.
HalfFiberClass classify(const EllipticConfiguration& config);

// classify() over all enumerated configurations, deduplicated by class
// (first source kept), in enumeration order.
std::vector<HalfFiberClass> build_hf_set(const CurveSystem& system, EnumerateOptions opts = {});
std::vector<HalfFiberClass> hf_from_configurations(const std::vector<EllipticConfiguration>& configs);

}  // namespace enriques
