#include "enriques/half_fibers.hpp"

#include <set>

namespace enriques {

HalfFiberClass classify(const EllipticConfiguration& config) {
    HalfFiberClass h;
    h.source = config;
    if (is_two_divisible(config.klass)) {
        h.kind = FiberKind::F;
        h.klass = halve(config.klass);
        if (is_two_divisible(h.klass))
            throw DoubleDivisibleError("configuration class is divisible by 4");
    } else {
        h.kind = FiberKind::HF;
        h.klass = config.klass;
    }
    return h;
}

std::vector<HalfFiberClass> hf_from_configurations(const std::vector<EllipticConfiguration>& configs) {
    std::vector<HalfFiberClass> out;
    std::set<LatticeVector> seen;
    for (const auto& cfg : configs) {
        HalfFiberClass h = classify(cfg);
        if (seen.insert(h.klass).second) out.push_back(std::move(h));
    }
    return out;
}

std::vector<HalfFiberClass> build_hf_set(const CurveSystem& system, EnumerateOptions opts) {
    return hf_from_configurations(enumerate_configurations(system, opts));
}

}  // namespace enriques
