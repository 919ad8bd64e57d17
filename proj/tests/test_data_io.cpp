#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "enriques/data_io.hpp"
#include "helpers.hpp"

using namespace enriques;

namespace {

LatticeVector vec(std::initializer_list<Coord> xs) {
    LatticeVector v;
    int i = 0;
    for (Coord x : xs) v[i++] = x;
    return v;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string write_temp(const std::string& contents) {
    static int counter = 0;
    std::string path = (std::filesystem::temp_directory_path() /
                        ("enriques_io_test_" + std::to_string(counter++) + ".json"))
                           .string();
    std::ofstream out(path);
    out << contents;
    return path;
}

}  // namespace

TEST_CASE("bundled case 145 loads faithfully") {
    const CaseData& d = case145();
    CHECK(d.case_id == 145);
    CHECK(d.basis == "E10-fig1");
    REQUIRE(d.system.size() == 10);
    CHECK(d.system.curve(0) == vec({4, 2, 4, 6, 5, 4, 3, 2, 1, 0}));
    CHECK(d.system.curve(1) == vec({2, 2, 3, 4, 3, 2, 1, 0, 0, 0}));
    CHECK(d.system.curve(8) == vec({0, 0, 1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(d.system.label(9) == "R9");
    CHECK(d.gens.has("eps"));
    CHECK(d.gens.has("gamma"));
    CHECK(d.gens.get("gamma").m[2] ==
          std::array<Coord, 10>{10, 4, 11, 18, 15, 12, 9, 6, 4, 2});
}

TEST_CASE("bundled case 158 loads faithfully") {
    const CaseData& d = case158();
    CHECK(d.case_id == 158);
    REQUIRE(d.system.size() == 16);
    CHECK(d.system.curve(15) == vec({12, 7, 14, 23, 20, 19, 14, 10, 6, 2}));
    CHECK(d.system.label(15) == "R2*H2");
    CHECK(d.gens.empty());
}

TEST_CASE("schema violations throw with a location") {
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_case("does_not_exist.json"), SchemaError);
    }
    SUBCASE("truncated file") {
        std::string full = slurp(data_path("cases/145.json"));
        std::string path = write_temp(full.substr(0, full.size() / 2));
        CHECK_THROWS_AS(load_case(path), SchemaError);
    }
    SUBCASE("floats are rejected") {
        std::string path = write_temp(R"({"schema_version":1,"case":9,"basis":"E10-fig1",
            "curves":[{"label":"R0","coords":[0,0,1.0,0,0,0,0,0,0,0]}],"automorphisms":{}})");
        CHECK_THROWS_AS(load_case(path), SchemaError);
    }
    SUBCASE("wrong basis tag") {
        std::string path = write_temp(R"({"schema_version":1,"case":9,"basis":"other",
            "curves":[{"label":"R0","coords":[0,0,1,0,0,0,0,0,0,0]}],"automorphisms":{}})");
        CHECK_THROWS_AS(load_case(path), SchemaError);
    }
    SUBCASE("short coordinate array") {
        std::string path = write_temp(R"({"schema_version":1,"case":9,"basis":"E10-fig1",
            "curves":[{"label":"R0","coords":[0,0,1]}],"automorphisms":{}})");
        CHECK_THROWS_AS(load_case(path), SchemaError);
    }
}

TEST_CASE("invalid curve data fails domain validation") {
    std::string path = write_temp(R"({"schema_version":1,"case":9,"basis":"E10-fig1",
        "curves":[{"label":"R0","coords":[1,1,0,0,0,0,0,0,0,0]}],"automorphisms":{}})");
    CHECK_THROWS_AS(load_case(path), NotMinusTwoError);
    std::string path2 = write_temp(R"({"schema_version":1,"case":9,"basis":"E10-fig1",
        "curves":[{"label":"R0","coords":[0,0,1,0,0,0,0,0,0,0]}],
        "automorphisms":{"g":[[1,0,0,0,0,0,0,0,0,0],[0,1,0,0,0,0,0,0,0,0],
          [0,0,1,0,0,0,0,0,0,0],[0,0,0,1,0,0,0,0,0,0],[0,0,0,0,1,0,0,0,0,0],
          [0,0,0,0,0,1,0,0,0,0],[0,0,0,0,0,0,1,0,0,0],[0,0,0,0,0,0,0,1,0,0],
          [0,0,0,0,0,0,0,0,1,0],[0,0,0,0,0,0,0,0,0,2]]}})");
    CHECK_THROWS_AS(load_case(path2), NotIsometryError);
}

TEST_CASE("certificate loading") {
    auto certs = load_certificates(data_path("certs/145.json"));
    REQUIRE(certs.size() == 1);
    const Certificate& c = certs[0];
    CHECK(c.case_id == 145);
    CHECK(c.claimed_bound == 4);
    CHECK(c.equality_claimed);
    REQUIRE(c.members.size() == 4);
    CHECK(c.members[0].den == 1);
    REQUIRE(c.members[0].terms.size() == 8);
    // first member is R0 + R2 + ... + R9 without R1, R8
    std::vector<int> bases;
    for (const auto& t : c.members[0].terms) bases.push_back(t.curve.base);
    CHECK(bases == std::vector<int>{0, 2, 3, 4, 5, 6, 7, 9});

    auto corpus = load_certificates(data_path("certs/all.json"));
    CHECK(corpus.size() == 155);
    for (const auto& cert : corpus) {
        if (cert.case_id != 84) continue;
        bool found = false;
        for (const auto& m : cert.members)
            for (const auto& t : m.terms)
                if (t.curve.base == 0 && t.curve.word == Word{{"H5", 1}}) found = true;
        CHECK(found);
    }
}

TEST_CASE("empty certificate list is valid") {
    std::string path = write_temp(R"({"schema_version":1,"certificates":[]})");
    CHECK(load_certificates(path).empty());
}

TEST_CASE("canonical serialization round-trips byte-stably") {
    for (const char* rel : {"cases/145.json", "cases/158.json"}) {
        CaseData d = load_case(data_path(rel));
        std::string once = canonical_case_json(d);
        std::string path = write_temp(once);
        std::string twice = canonical_case_json(load_case(path));
        CHECK(once == twice);
    }
    auto certs = load_certificates(data_path("certs/all.json"));
    std::string once = canonical_certificates_json(certs);
    std::string path = write_temp(once);
    CHECK(canonical_certificates_json(load_certificates(path)) == once);
}

TEST_CASE("bundled snapshots have not drifted") {
    CHECK(fnv1a64(slurp(data_path("cases/145.json"))) == 0xd07d4e2690edaeb6ull);
    CHECK(fnv1a64(slurp(data_path("cases/158.json"))) == 0x17eb0e2ef589776eull);
    CHECK(fnv1a64(slurp(data_path("certs/145.json"))) == 0x788d1a2b89fbe1eaull);
    CHECK(fnv1a64(slurp(data_path("certs/158.json"))) == 0x40f72d9e7f5f4302ull);
    CHECK(fnv1a64(slurp(data_path("certs/all.json"))) == 0x2100e949c0a83818ull);
}
