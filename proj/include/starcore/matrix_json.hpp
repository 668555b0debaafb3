#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "starcore/matrix.hpp"

namespace starcore {

using json = nlohmann::json;

// {"rows": m, "cols": n, "entries": [["1", "3/4-2/5i"], ...]}
inline json to_json(const Matrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_scalar(m(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix JSON needs 'rows', 'cols' and 'entries'");
    const json& jr = j.at("rows");
    const json& jc = j.at("cols");
    if (!jr.is_number_unsigned() || !jc.is_number_unsigned())
        throw ParseError("matrix 'rows' and 'cols' must be nonnegative integers");
    const auto rows = jr.get<std::size_t>();
    const auto cols = jc.get<std::size_t>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw ParseError("matrix 'entries' must be an array of " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) {
            if (!row[k].is_string())
                throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(k) + ") must be a string");
            m(i, k) = parse_scalar(row[k].get<std::string>());
        }
    }
    return m;
}

inline json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("'" + path.string() + "': " + e.what());
    }
}

inline void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

inline Matrix read_matrix_file(const std::filesystem::path& path) { return matrix_from_json(read_json_file(path)); }

inline void write_matrix_file(const std::filesystem::path& path, const Matrix& m) { write_json_file(path, to_json(m)); }

} // namespace starcore
