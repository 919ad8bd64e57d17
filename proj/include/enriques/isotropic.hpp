#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "enriques/half_fibers.hpp"

namespace enriques {

using Rational = boost::multiprecision::cpp_rational;

// Result of the cnd computation: the maximum length m of a sequence
// f_1..f_m with f_i.f_j = 1 - delta_ij among the given classes, plus the
// lexicographically-first maximum witness (indices into the input, sorted).
struct CndResult {
    int m = 0;
    std::vector<int> witness;
};

struct SolverOptions {
    bool parallel = true;  // result is schedule-independent either way
};

// Maximum clique in the compatibility graph (edge iff product 1), by
// branch and bound with the hard rank cap of 10.  Throws NotIsotropicError
// if an input class has nonzero self-intersection.
CndResult compute_cnd(const std::vector<HalfFiberClass>& hf, SolverOptions opts = {});

// Standalone protocol checker for a claimed sequence: integrality,
// 2-indivisibility, and the full product matrix against 1_m - I_m.
// Failures are report entries, never exceptions.
struct SequenceReport {
    struct Entry {
        bool integral = false;
        bool primitive = false;  // not 2-divisible
    };
    std::vector<Entry> entries;
    std::vector<std::vector<Rational>> product;
    bool product_ok = false;
    bool pass = false;
};

SequenceReport verify_sequence(const std::vector<RationalClass>& members);
SequenceReport verify_sequence(const std::vector<HalfFiberClass>& members);

// Compatibility adjacency used by the solver; exposed for the reference
// oracle and the benchmark.
std::vector<std::vector<char>> compatibility_graph(const std::vector<HalfFiberClass>& hf);

// Branch-and-bound maximum clique on a plain adjacency matrix.
int max_clique(const std::vector<std::vector<char>>& adj, int hard_cap, bool parallel,
               std::vector<int>* lex_first_witness = nullptr);

}  // namespace enriques
