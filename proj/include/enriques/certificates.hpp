#pragma once

#include <string>
#include <vector>

#include "enriques/aut.hpp"

namespace enriques {

// One term of a certificate member: mult * (R<base> acted on by word).
struct CertTerm {
    Coord mult = 1;
    OrbitWord curve;
};

// One claimed half-fiber: (1/den) * sum of terms.
struct CertificateEntry {
    int den = 1;  // 1 or 2
    std::vector<CertTerm> terms;
};

// A claimed isotropic sequence for one case of the classification table.
struct Certificate {
    int case_id = 0;
    int claimed_bound = 0;
    bool equality_claimed = false;
    std::string invariant = "nd";  // informational: "nd" or "cnd"
    std::vector<CertificateEntry> members;
};

struct EntryCheck {
    std::string display;     // "1/2(R0+R2)"
    LatticeVector klass;     // the resolved half-fiber class
    bool integral = false;
    bool primitive = false;  // not 2-divisible
    bool config_ok = false;  // support is a valid configuration with matching multiplicities
    DynkinLabel type;
    FiberKind kind = FiberKind::HF;
    std::string note;
    bool pass() const { return integral && primitive && config_ok; }
};

struct CertificateReport {
    int case_id = 0;
    std::vector<EntryCheck> entries;
    std::vector<std::vector<Rational>> product;
    bool product_ok = false;
    bool bound_ok = false;
    bool pass = false;
};

// Full protocol check of one certificate against loaded case data: per-entry
// integrality, 2-indivisibility and configuration validation, then the
// product-matrix identity and the claimed bound.  Unresolvable curve
// references throw; everything else is reported.
CertificateReport verify_certificate(const Certificate& cert, const CurveSystem& system,
                                     const GeneratorSet& gens);

enum class CaseStatus { Pass, Fail, Skipped };

struct CorpusSummary {
    struct Row {
        int case_id = 0;
        CaseStatus status = CaseStatus::Skipped;
        int claimed_bound = 0;
        std::string note;
    };
    std::vector<Row> rows;
    int passed = 0, failed = 0, skipped = 0;
};

// Batch driver: verifies each certificate against `<cases_dir>/<id>.json`,
// reporting SKIPPED where no case data is bundled.
CorpusSummary verify_corpus(const std::vector<Certificate>& corpus, const std::string& cases_dir);

}  // namespace enriques
