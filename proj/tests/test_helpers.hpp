#pragma once

#include <initializer_list>
#include <vector>

#include "toral/intmath.hpp"

namespace toral::test {

inline IntMat mat(std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    IntMat m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

} // namespace toral::test
