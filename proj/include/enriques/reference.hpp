#pragma once

#include <vector>

#include "enriques/elliptic.hpp"

namespace enriques {

// Serial brute-force reference implementations.  These are the oracles the
// optimized kernels are tested against; they share no search code with them.

// Scans every subset of size 2..max_support, keeps the connected ones and
// applies the acceptance test independently.  Exponential; for differential
// testing on small systems only.
std::vector<EllipticConfiguration> enumerate_configurations_reference(const CurveSystem& system,
                                                                      int max_support = 10);

// Maximum clique by plain recursion over an adjacency matrix, no bounding.
// Returns the size and writes the lexicographically-first maximum witness.
int max_clique_reference(const std::vector<std::vector<char>>& adj, std::vector<int>* witness = nullptr);

}  // namespace enriques
