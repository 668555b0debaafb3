#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "starcore/starcore.hpp"

namespace testutil {

inline starcore::Scalar s(const char* text) { return starcore::parse_scalar(text); }

// mat({{"1", "1/2"}, {"i", "0"}})
inline starcore::Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<starcore::Scalar> entries;
    std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows)
        for (const char* e : r) entries.push_back(starcore::parse_scalar(e));
    return starcore::Matrix(rows.size(), cols, std::move(entries));
}

inline starcore::Matrix diag(std::initializer_list<long> d) {
    std::vector<starcore::Scalar> v(d.begin(), d.end());
    return starcore::Matrix::diagonal(v);
}

} // namespace testutil
