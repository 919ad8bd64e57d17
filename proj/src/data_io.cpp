#include "enriques/data_io.hpp"

#include <json.hpp>

#include <fstream>

namespace enriques {

using nlohmann::json;

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path, "cannot open file");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw SchemaError(path, std::string("invalid JSON: ") + e.what());
    }
    return j;
}

long long get_int(const json& j, const std::string& loc) {
    if (!j.is_number_integer()) throw SchemaError(loc, "expected an integer (floats are not allowed)");
    return j.get<long long>();
}

const json& get_field(const json& j, const char* key, const std::string& loc) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(loc, std::string("missing field '") + key + "'");
    return *it;
}

LatticeVector get_vec10(const json& j, const std::string& loc) {
    if (!j.is_array() || j.size() != 10) throw SchemaError(loc, "expected an array of 10 integers");
    LatticeVector v;
    for (int i = 0; i < 10; ++i) v[i] = get_int(j[static_cast<size_t>(i)], loc);
    return v;
}

}  // namespace

CaseData load_case(const std::string& path) {
    json j = parse_file(path);
    if (!j.is_object()) throw SchemaError(path, "top level must be an object");
    CaseData d;
    d.case_id = static_cast<int>(get_int(get_field(j, "case", path), path + ":case"));
    const json& basis = get_field(j, "basis", path);
    if (!basis.is_string()) throw SchemaError(path + ":basis", "expected a string");
    d.basis = basis.get<std::string>();
    if (d.basis != "E10-fig1")
        throw SchemaError(path + ":basis", "unsupported basis tag '" + d.basis + "'");
    if (j.contains("notes")) {
        if (!j["notes"].is_string()) throw SchemaError(path + ":notes", "expected a string");
        d.notes = j["notes"].get<std::string>();
    }

    const json& curves = get_field(j, "curves", path);
    if (!curves.is_array() || curves.empty()) throw SchemaError(path + ":curves", "expected a non-empty array");
    std::vector<LatticeVector> vs;
    std::vector<std::string> labels;
    for (size_t i = 0; i < curves.size(); ++i) {
        std::string loc = path + ":curves[" + std::to_string(i) + "]";
        const json& c = curves[i];
        if (!c.is_object()) throw SchemaError(loc, "expected an object");
        const json& lab = get_field(c, "label", loc);
        if (!lab.is_string()) throw SchemaError(loc + ".label", "expected a string");
        labels.push_back(lab.get<std::string>());
        vs.push_back(get_vec10(get_field(c, "coords", loc), loc + ".coords"));
    }
    d.system = build_system(vs, std::move(labels));

    const json& autos = get_field(j, "automorphisms", path);
    if (!autos.is_object()) throw SchemaError(path + ":automorphisms", "expected an object");
    std::vector<std::pair<std::string, Mat10>> raw;
    for (auto it = autos.begin(); it != autos.end(); ++it) {
        std::string loc = path + ":automorphisms." + it.key();
        const json& rows = it.value();
        if (!rows.is_array() || rows.size() != 10) throw SchemaError(loc, "expected 10 rows");
        Mat10 m{};
        for (int r = 0; r < 10; ++r) {
            const json& row = rows[static_cast<size_t>(r)];
            if (!row.is_array() || row.size() != 10)
                throw SchemaError(loc + "[" + std::to_string(r) + "]", "expected 10 integers");
            for (int c = 0; c < 10; ++c)
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    get_int(row[static_cast<size_t>(c)], loc);
        }
        raw.emplace_back(it.key(), m);
    }
    d.gens = make_generators(raw);
    return d;
}

std::vector<Certificate> load_certificates(const std::string& path) {
    json j = parse_file(path);
    if (!j.is_object()) throw SchemaError(path, "top level must be an object");
    const json& list = get_field(j, "certificates", path);
    if (!list.is_array()) throw SchemaError(path + ":certificates", "expected an array");
    std::vector<Certificate> out;
    for (size_t i = 0; i < list.size(); ++i) {
        std::string loc = path + ":certificates[" + std::to_string(i) + "]";
        const json& c = list[i];
        if (!c.is_object()) throw SchemaError(loc, "expected an object");
        Certificate cert;
        cert.case_id = static_cast<int>(get_int(get_field(c, "case", loc), loc + ".case"));
        cert.claimed_bound = static_cast<int>(get_int(get_field(c, "bound", loc), loc + ".bound"));
        const json& eq = get_field(c, "equality", loc);
        if (!eq.is_boolean()) throw SchemaError(loc + ".equality", "expected a boolean");
        cert.equality_claimed = eq.get<bool>();
        if (c.contains("invariant")) {
            if (!c["invariant"].is_string()) throw SchemaError(loc + ".invariant", "expected a string");
            cert.invariant = c["invariant"].get<std::string>();
        }
        const json& members = get_field(c, "members", loc);
        if (!members.is_array()) throw SchemaError(loc + ".members", "expected an array");
        for (size_t m = 0; m < members.size(); ++m) {
            std::string mloc = loc + ".members[" + std::to_string(m) + "]";
            const json& mem = members[m];
            CertificateEntry entry;
            entry.den = static_cast<int>(get_int(get_field(mem, "den", mloc), mloc + ".den"));
            if (entry.den != 1 && entry.den != 2) throw SchemaError(mloc + ".den", "must be 1 or 2");
            const json& terms = get_field(mem, "terms", mloc);
            if (!terms.is_array() || terms.empty()) throw SchemaError(mloc + ".terms", "expected a non-empty array");
            for (size_t t = 0; t < terms.size(); ++t) {
                std::string tloc = mloc + ".terms[" + std::to_string(t) + "]";
                const json& term = terms[t];
                CertTerm ct;
                ct.mult = get_int(get_field(term, "mult", tloc), tloc + ".mult");
                if (ct.mult < 1) throw SchemaError(tloc + ".mult", "must be positive");
                ct.curve.base = static_cast<int>(get_int(get_field(term, "base", tloc), tloc + ".base"));
                if (ct.curve.base < 0) throw SchemaError(tloc + ".base", "must be >= 0");
                if (term.contains("word")) {
                    const json& word = term["word"];
                    if (!word.is_array()) throw SchemaError(tloc + ".word", "expected an array");
                    for (size_t w = 0; w < word.size(); ++w) {
                        const json& fac = word[w];
                        if (!fac.is_array() || fac.size() != 2 || !fac[0].is_string())
                            throw SchemaError(tloc + ".word", "expected [name, exponent] pairs");
                        ct.curve.word.emplace_back(fac[0].get<std::string>(),
                                                   static_cast<int>(get_int(fac[1], tloc + ".word")));
                    }
                }
                entry.terms.push_back(std::move(ct));
            }
            cert.members.push_back(std::move(entry));
        }
        out.push_back(std::move(cert));
    }
    return out;
}

namespace {

json case_to_json(const CaseData& d) {
    json j;
    j["schema_version"] = 1;
    j["case"] = d.case_id;
    j["basis"] = d.basis;
    if (!d.notes.empty()) j["notes"] = d.notes;
    j["curves"] = json::array();
    for (int i = 0; i < d.system.size(); ++i) {
        json c;
        c["label"] = d.system.label(i);
        c["coords"] = json::array();
        for (int k = 0; k < 10; ++k) c["coords"].push_back(d.system.curve(i)[k]);
        j["curves"].push_back(std::move(c));
    }
    j["automorphisms"] = json::object();
    for (const auto& name : d.gens.names) {
        json rows = json::array();
        for (int r = 0; r < 10; ++r) {
            json row = json::array();
            for (int c = 0; c < 10; ++c) row.push_back(d.gens.gens.at(name).m[static_cast<size_t>(r)][static_cast<size_t>(c)]);
            rows.push_back(std::move(row));
        }
        j["automorphisms"][name] = std::move(rows);
    }
    return j;
}

json certs_to_json(const std::vector<Certificate>& certs) {
    json j;
    j["schema_version"] = 1;
    j["certificates"] = json::array();
    for (const Certificate& c : certs) {
        json cj;
        cj["case"] = c.case_id;
        cj["bound"] = c.claimed_bound;
        cj["equality"] = c.equality_claimed;
        cj["invariant"] = c.invariant;
        cj["members"] = json::array();
        for (const CertificateEntry& e : c.members) {
            json ej;
            ej["den"] = e.den;
            ej["terms"] = json::array();
            for (const CertTerm& t : e.terms) {
                json tj;
                tj["mult"] = t.mult;
                tj["base"] = t.curve.base;
                if (!t.curve.word.empty()) {
                    json wj = json::array();
                    for (const auto& [name, exp] : t.curve.word) wj.push_back(json::array({name, exp}));
                    tj["word"] = std::move(wj);
                }
                ej["terms"].push_back(std::move(tj));
            }
            cj["members"].push_back(std::move(ej));
        }
        j["certificates"].push_back(std::move(cj));
    }
    return j;
}

}  // namespace

std::string canonical_case_json(const CaseData& d) { return case_to_json(d).dump(2) + "\n"; }

std::string canonical_certificates_json(const std::vector<Certificate>& certs) {
    return certs_to_json(certs).dump(2) + "\n";
}

}  // namespace enriques
