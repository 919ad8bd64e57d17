#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "enriques/errors.hpp"

namespace enriques {

using Coord = long long;

// A class in Num(Y) written in the fixed E10 basis B1..B10.  The basis Gram
// matrix has -2 on the diagonal and 1 exactly for the adjacencies
// B1-B4, B2-B3-B4-B5-B6-B7-B8-B9-B10.  Pure value type.
struct LatticeVector {
    std::array<Coord, 10> c{};

    Coord& operator[](int i) { return c[static_cast<size_t>(i)]; }
    Coord operator[](int i) const { return c[static_cast<size_t>(i)]; }

    static LatticeVector basis(int i);  // B_i, 0-indexed
    static LatticeVector zero() { return {}; }

    bool operator==(const LatticeVector&) const = default;
    auto operator<=>(const LatticeVector&) const = default;

    LatticeVector& operator+=(const LatticeVector& o);
    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator*(Coord s, const LatticeVector& v);

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

// The E10 Gram matrix as a plain 10x10 array, row i = products of B_i with
// the basis.
const std::array<std::array<Coord, 10>, 10>& gram_e10();

// Intersection product u.v in the E10 form.  Exact, symmetric, bilinear.
Coord dot(const LatticeVector& u, const LatticeVector& v);

// True iff every coordinate is even.
bool is_two_divisible(const LatticeVector& v);

// Divides every coordinate by 2; throws NotDivisibleError on an odd one.
LatticeVector halve(const LatticeVector& v);

// numerator/denominator with denominator 1 or 2, kept in lowest terms.
// Denominator 2 only occurs transiently: valid half-fiber classes are
// integral.
struct RationalClass {
    LatticeVector num;
    int den = 1;

    static RationalClass make(LatticeVector v, int den);
    bool integral() const { return den == 1; }
    bool operator==(const RationalClass&) const = default;
};

// 10x10 integer matrix acting on row vectors from the right, validated to
// preserve the E10 form.  The inverse is integral (the form is unimodular)
// and cached at validation time.
struct IsometryMatrix {
    std::array<std::array<Coord, 10>, 10> m{};
    std::array<std::array<Coord, 10>, 10> inv{};
};

using Mat10 = std::array<std::array<Coord, 10>, 10>;

Mat10 identity10();
Mat10 mul(const Mat10& a, const Mat10& b);

// Accepts M iff M * G * M^T == G; throws NotIsometryError with the first
// violated entry otherwise.
IsometryMatrix validate_isometry(const Mat10& m);

// v * M (right action on row vectors).
LatticeVector apply(const LatticeVector& v, const Mat10& m);
inline LatticeVector apply(const LatticeVector& v, const IsometryMatrix& m) {
    return enriques::apply(v, m.m);
}

// Dense integer matrix used for cached intersection tables and restricted
// Gram matrices.  Small sizes only; arithmetic on it goes through the exact
// routines below.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Coord> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    Coord& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    Coord at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    bool symmetric() const;
    bool operator==(const IntMat&) const = default;
};

struct Inertia {
    int pos = 0, neg = 0, zero = 0;
    bool operator==(const Inertia&) const = default;
};

// Exact inertia (numbers of positive/negative/zero eigenvalues) of a
// symmetric integer matrix, via symmetric elimination over the rationals
// with big-integer arithmetic.  Throws NonSymmetricError.
Inertia exact_inertia(const IntMat& s);

// Exact rank of a symmetric integer matrix; throws NonSymmetricError.
int rank_of_gram(const IntMat& s);

// Same, with the pairwise product matrix computed from the vectors.
int rank_of_gram(const std::vector<LatticeVector>& vs);

// Exact row rank of the coordinate matrix of a list of vectors.
int coordinate_rank(const std::vector<LatticeVector>& vs);

// Exact determinant via fraction-free elimination.  Throws OverflowError if
// the value does not fit a Coord (it always does for the matrices handled
// here).
Coord determinant(const IntMat& s);

// For a symmetric matrix of corank exactly 1, returns the primitive integer
// kernel vector with positive sign convention; empty vector if the corank is
// not 1.  The strict-positivity test is left to the caller.
std::vector<Coord> corank1_kernel(const IntMat& s);

}  // namespace enriques
