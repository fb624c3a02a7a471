#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccsec/rational.hpp"

namespace ccsec::testing {

// Reads a reference CSV, skipping '#' comment lines; every field is an integer.
inline std::vector<std::vector<Int>> load_int_rows(const std::string& filename) {
    const std::string path = std::string(CCSEC_DATA_DIR) + "/" + filename;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<Int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<Int> row;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) row.emplace_back(field);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ccsec::testing
