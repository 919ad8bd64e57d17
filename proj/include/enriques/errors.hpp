#pragma once

#include <stdexcept>
#include <string>

namespace enriques {

// Base class for everything this library throws on bad input or bad data.
// Computational results are never reported through exceptions; those go
// through the report structs of the individual modules.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : Error {
    using Error::Error;
};

struct NotDivisibleError : Error {
    int coordinate;
    explicit NotDivisibleError(int coord)
        : Error("coordinate " + std::to_string(coord) + " is odd, class is not 2-divisible"),
          coordinate(coord) {}
};

struct DoubleDivisibleError : Error {
    using Error::Error;
};

struct NotIsometryError : Error {
    int row, col;
    NotIsometryError(int r, int c)
        : Error("matrix does not preserve the E10 form, first violation at entry (" +
                std::to_string(r) + "," + std::to_string(c) + ")"),
          row(r), col(c) {}
};

struct NonSymmetricError : Error {
    using Error::Error;
};

struct NotMinusTwoError : Error {
    int index;
    explicit NotMinusTwoError(int i)
        : Error("curve " + std::to_string(i) + " has self-intersection != -2"), index(i) {}
};

struct NegativePairingError : Error {
    int i, j;
    NegativePairingError(int a, int b)
        : Error("curves " + std::to_string(a) + " and " + std::to_string(b) +
                " have negative intersection"),
          i(a), j(b) {}
};

struct DuplicateCurveError : Error {
    int i, j;
    DuplicateCurveError(int a, int b)
        : Error("curves " + std::to_string(a) + " and " + std::to_string(b) + " are equal"),
          i(a), j(b) {}
};

struct InconsistentTypeError : Error {
    using Error::Error;
};

struct NotIsotropicError : Error {
    int index;
    explicit NotIsotropicError(int i)
        : Error("class " + std::to_string(i) + " is not isotropic"), index(i) {}
};

struct UnknownGeneratorError : Error {
    std::string name;
    explicit UnknownGeneratorError(std::string n)
        : Error("unknown generator '" + n + "'"), name(std::move(n)) {}
};

struct InvariantViolationError : Error {
    using Error::Error;
};

struct NoFitError : Error {
    using Error::Error;
};

struct SchemaError : Error {
    std::string location;
    SchemaError(std::string loc, const std::string& what)
        : Error(loc + ": " + what), location(std::move(loc)) {}
};

struct UnresolvableCurveError : Error {
    int entry, term;
    UnresolvableCurveError(int e, int t, const std::string& what)
        : Error("member " + std::to_string(e) + ", term " + std::to_string(t) + ": " + what),
          entry(e), term(t) {}
};

struct ProofStepFailedError : Error {
    std::string step;
    ProofStepFailedError(std::string s, const std::string& what)
        : Error("proof step '" + s + "' failed: " + what), step(std::move(s)) {}
};

}  // namespace enriques
