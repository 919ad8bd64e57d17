#include "enriques/curves.hpp"

#include <algorithm>

namespace enriques {

int CurveSystem::find(const LatticeVector& v) const {
    for (int i = 0; i < size(); ++i)
        if (curves[static_cast<size_t>(i)] == v) return i;
    return -1;
}

int CurveSystem::find_label(const std::string& l) const {
    for (int i = 0; i < size(); ++i)
        if (labels[static_cast<size_t>(i)] == l) return i;
    return -1;
}

CurveSystem CurveSystem::subsystem(const std::vector<int>& indices) const {
    std::vector<LatticeVector> vs;
    std::vector<std::string> ls;
    vs.reserve(indices.size());
    for (int i : indices) {
        vs.push_back(curve(i));
        ls.push_back(label(i));
    }
    return build_system(vs, std::move(ls));
}

CurveSystem build_system(const std::vector<LatticeVector>& vectors,
                         std::vector<std::string> labels) {
    const int n = static_cast<int>(vectors.size());
    if (labels.empty()) {
        labels.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) labels.push_back("C" + std::to_string(i));
    }
    if (static_cast<int>(labels.size()) != n) throw Error("label count does not match curve count");

    CurveSystem s;
    s.curves = vectors;
    s.labels = std::move(labels);
    s.intersections = IntMat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Coord p = dot(vectors[static_cast<size_t>(i)], vectors[static_cast<size_t>(j)]);
            s.intersections.at(i, j) = p;
            s.intersections.at(j, i) = p;
        }
    for (int i = 0; i < n; ++i)
        if (s.intersections.at(i, i) != -2) throw NotMinusTwoError(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (vectors[static_cast<size_t>(i)] == vectors[static_cast<size_t>(j)])
                throw DuplicateCurveError(i, j);
            if (s.intersections.at(i, j) < 0) throw NegativePairingError(i, j);
        }
    return s;
}

bool spans_full_rank(const CurveSystem& system) {
    return coordinate_rank(system.curves) == 10;
}

}  // namespace enriques
