#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "enriques/curves.hpp"
#include "enriques/isotropic.hpp"

namespace enriques {

// A word in named generators, applied left to right by right-multiplication:
// v * g1^e1 * g2^e2 * ...   Exponents may be negative.
using Word = std::vector<std::pair<std::string, int>>;

std::string word_str(const Word& w);  // "gamma^2*eps"

// Named validated isometries with cached integral inverses.
struct GeneratorSet {
    std::vector<std::string> names;  // insertion order
    std::map<std::string, IsometryMatrix> gens;

    bool has(const std::string& name) const { return gens.count(name) != 0; }
    const IsometryMatrix& get(const std::string& name) const;
    bool empty() const { return gens.empty(); }
};

GeneratorSet make_generators(const std::vector<std::pair<std::string, Mat10>>& raw);

// Reference to a curve moved by a word, e.g. base 2 with word [("H2",1)]
// for R2*H2.
struct OrbitWord {
    int base = -1;
    Word word;
};

LatticeVector apply_word(const LatticeVector& v, const Word& w, const GeneratorSet& gens);
Mat10 word_matrix(const Word& w, const GeneratorSet& gens);

// Per-relation matrix identity check; a relation holds when both words
// evaluate to the same matrix.
struct RelationReport {
    struct Item {
        std::string lhs, rhs;
        bool equal = false;
    };
    std::vector<Item> items;
    bool all_equal = true;
};

RelationReport check_relations(const GeneratorSet& gens,
                               const std::vector<std::pair<Word, Word>>& relations);

// Closure of the system under all generators and inverses up to the given
// word length.  Original curves keep their positions; new curves follow in
// (word length, coordinate-lexicographic) order with synthesized labels.
// Throws InvariantViolationError if an orbit image breaks the curve-system
// invariants.
CurveSystem expand_orbit(const CurveSystem& system, const GeneratorSet& gens, int radius);

// p(k) = a k^2 + b k + c + d (-1)^k with exact rational coefficients.
struct QuasiPolynomial {
    Rational a, b, c, d;
    Rational eval(long long k) const;
    bool operator==(const QuasiPolynomial&) const = default;
    std::string str() const;
};

// Unique interpolant through the samples, validated against every one of
// them.  Needs at least 6 samples at distinct k covering both parities.
// Throws NoFitError when the data is not of this shape.
QuasiPolynomial fit_quasipolynomial(const std::vector<std::pair<long long, Rational>>& samples);

// All integer k with p(k) == target.  Requires a > 0, or a == 0 with the
// per-parity linear/constant cases handled exactly; the constant-equal case
// is reported as unbounded rather than enumerated.
struct SolutionSet {
    bool unbounded = false;
    std::vector<long long> ks;
};

SolutionSet integer_solutions_equal(const QuasiPolynomial& p, const Rational& target);

// Machine replay of the length-5 exclusion argument for the bundled case
// 145: representative configurations, their stabilizer identities, the
// fitted intersection quasipolynomials with their solution sets, and the
// final type-multiset count.  Concludes cnd = 4.  Throws
// ProofStepFailedError at the first identity that does not hold.
struct ProofStep {
    std::string name;
    std::string detail;
};

struct ExclusionProof {
    std::vector<ProofStep> steps;
    int cnd = 0;
};

ExclusionProof case145_exclusion_proof(const CurveSystem& system, const GeneratorSet& gens);

}  // namespace enriques
