#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "homposet/element_set.hpp"

namespace homposet::testing {

inline const nlohmann::json& derived() {
    static const nlohmann::json doc = [] {
        std::ifstream in(std::string(HOMPOSET_TEST_DATA_DIR) + "/derived_values.json");
        return nlohmann::json::parse(in);
    }();
    return doc;
}

inline std::vector<Elem> members_of(const nlohmann::json& j) { return j.get<std::vector<Elem>>(); }

}  // namespace homposet::testing
