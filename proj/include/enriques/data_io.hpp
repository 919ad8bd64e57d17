#pragma once

#include <string>
#include <vector>

#include "enriques/certificates.hpp"

namespace enriques {

// A normalized case snapshot: its curve system in the fixed E10 basis and
// the named automorphism matrices (right action on row vectors).
struct CaseData {
    int case_id = 0;
    std::string basis;  // always "E10-fig1"
    CurveSystem system;
    GeneratorSet gens;
    std::string notes;
};

// Loads and fully validates a case file.  Bit-faithful: curve order is
// preserved exactly as in the file.  Schema violations (wrong types, floats,
// bad shapes) throw SchemaError; invariant failures propagate from the
// domain constructors.
CaseData load_case(const std::string& path);

std::vector<Certificate> load_certificates(const std::string& path);

// Canonical serialization (sorted keys, fixed integer formatting); the
// parse -> serialize round trip is byte-stable.
std::string canonical_case_json(const CaseData& data);
std::string canonical_certificates_json(const std::vector<Certificate>& certs);

}  // namespace enriques
