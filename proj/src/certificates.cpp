#include "enriques/certificates.hpp"

#include <filesystem>
#include <sstream>

#include "enriques/data_io.hpp"

namespace enriques {

namespace {

std::string term_label(const CertTerm& t) {
    std::string s = "R" + std::to_string(t.curve.base);
    for (const auto& [name, exp] : t.curve.word) {
        for (int i = 0; i < std::max(exp, 1); ++i) {
            s += "*" + name;
            if (exp < 1) {
                s += "^" + std::to_string(exp);
                break;
            }
        }
    }
    return s;
}

// Resolve a term to a curve class: by generator action when the word's
// generators are available, otherwise by looking up a precomputed curve
// bundled under the composite label (e.g. "R2*H2").
LatticeVector resolve_term(const CertTerm& t, const CurveSystem& system, const GeneratorSet& gens,
                           int entry_idx, int term_idx) {
    std::string base_label = "R" + std::to_string(t.curve.base);
    bool have_gens = true;
    for (const auto& [name, exp] : t.curve.word)
        if (!gens.has(name)) have_gens = false;
    if (t.curve.word.empty() || have_gens) {
        int idx = system.find_label(base_label);
        if (idx < 0) {
            if (!t.curve.word.empty()) have_gens = false;  // fall through to composite lookup
            else
                throw UnresolvableCurveError(entry_idx, term_idx,
                                             "no curve labeled " + base_label + " in the case data");
        }
        if (have_gens && idx >= 0) return apply_word(system.curve(idx), t.curve.word, gens);
    }
    std::string full = term_label(t);
    int idx = system.find_label(full);
    if (idx < 0)
        throw UnresolvableCurveError(entry_idx, term_idx,
                                     "cannot resolve " + full +
                                         " (generator matrices missing and no precomputed curve)");
    return system.curve(idx);
}

std::string entry_display(const CertificateEntry& e) {
    std::ostringstream os;
    if (e.den == 2) os << "1/2";
    os << "(";
    for (size_t i = 0; i < e.terms.size(); ++i) {
        if (i) os << "+";
        if (e.terms[i].mult != 1) os << e.terms[i].mult;
        os << term_label(e.terms[i]);
    }
    os << ")";
    return os.str();
}

}  // namespace

CertificateReport verify_certificate(const Certificate& cert, const CurveSystem& system,
                                     const GeneratorSet& gens) {
    CertificateReport rep;
    rep.case_id = cert.case_id;
    std::vector<RationalClass> classes;

    for (size_t e = 0; e < cert.members.size(); ++e) {
        const CertificateEntry& entry = cert.members[e];
        EntryCheck chk;
        chk.display = entry_display(entry);

        std::vector<LatticeVector> support;
        std::vector<Coord> mults;
        LatticeVector config = LatticeVector::zero();
        bool dup = false;
        for (size_t t = 0; t < entry.terms.size(); ++t) {
            LatticeVector v =
                resolve_term(entry.terms[t], system, gens, static_cast<int>(e), static_cast<int>(t));
            for (const auto& u : support)
                if (u == v) dup = true;
            support.push_back(v);
            mults.push_back(entry.terms[t].mult);
            config += entry.terms[t].mult * v;
        }

        // the configuration is den * class; class integrality means den | config
        chk.kind = entry.den == 2 ? FiberKind::F : FiberKind::HF;
        if (entry.den == 2) {
            chk.integral = is_two_divisible(config);
            chk.klass = chk.integral ? halve(config) : config;
        } else {
            chk.integral = true;
            chk.klass = config;
        }
        chk.primitive = chk.integral && !is_two_divisible(chk.klass);

        if (dup) {
            chk.note = "duplicate curve inside one member";
        } else {
            try {
                CurveSystem local = build_system(support);
                IntMat g = local.intersections;
                Inertia in = exact_inertia(g);
                if (in.pos == 0 && in.zero == 1) {
                    std::vector<Coord> kern = corank1_kernel(g);
                    bool positive = !kern.empty();
                    for (Coord v : kern)
                        if (v <= 0) positive = false;
                    if (positive && kern == mults) {
                        chk.type = label_type(local, [&] {
                            std::vector<int> all(support.size());
                            for (size_t i = 0; i < support.size(); ++i) all[i] = static_cast<int>(i);
                            return all;
                        }(), kern);
                        chk.config_ok = true;
                    } else {
                        chk.note = "multiplicities are not the Kodaira marks of the support";
                    }
                } else {
                    chk.note = "support Gram matrix is not corank-1 negative semidefinite";
                }
            } catch (const Error& err) {
                chk.note = err.what();
            }
        }
        classes.push_back(RationalClass{chk.klass, chk.integral ? 1 : 2});
        rep.entries.push_back(std::move(chk));
    }

    SequenceReport seq = verify_sequence(classes);
    rep.product = std::move(seq.product);
    rep.product_ok = seq.product_ok;
    rep.bound_ok = static_cast<int>(cert.members.size()) == cert.claimed_bound;
    rep.pass = rep.product_ok && rep.bound_ok;
    for (const auto& e : rep.entries) rep.pass = rep.pass && e.pass();
    return rep;
}

CorpusSummary verify_corpus(const std::vector<Certificate>& corpus, const std::string& cases_dir) {
    CorpusSummary sum;
    for (const Certificate& cert : corpus) {
        CorpusSummary::Row row;
        row.case_id = cert.case_id;
        row.claimed_bound = cert.claimed_bound;
        std::string path = cases_dir + "/" + std::to_string(cert.case_id) + ".json";
        if (!std::filesystem::exists(path)) {
            row.status = CaseStatus::Skipped;
            row.note = "no curve data bundled";
        } else {
            try {
                CaseData data = load_case(path);
                CertificateReport rep = verify_certificate(cert, data.system, data.gens);
                row.status = rep.pass ? CaseStatus::Pass : CaseStatus::Fail;
                if (!rep.pass) row.note = "certificate checks failed";
            } catch (const Error& err) {
                row.status = CaseStatus::Fail;
                row.note = err.what();
            }
        }
        switch (row.status) {
            case CaseStatus::Pass: sum.passed++; break;
            case CaseStatus::Fail: sum.failed++; break;
            case CaseStatus::Skipped: sum.skipped++; break;
        }
        sum.rows.push_back(std::move(row));
    }
    return sum;
}

}  // namespace enriques
