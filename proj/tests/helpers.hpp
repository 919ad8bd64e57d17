#pragma once

#include <string>

#include "enriques/data_io.hpp"

#ifndef ENRIQUES_DATA_DIR
#define ENRIQUES_DATA_DIR "data"
#endif

inline std::string data_path(const std::string& rel) {
    return std::string(ENRIQUES_DATA_DIR) + "/" + rel;
}

inline const enriques::CaseData& case145() {
    static const enriques::CaseData d = enriques::load_case(data_path("cases/145.json"));
    return d;
}

inline const enriques::CaseData& case158() {
    static const enriques::CaseData d = enriques::load_case(data_path("cases/158.json"));
    return d;
}
