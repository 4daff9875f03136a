#pragma once

// Richardson extrapolation of sequences with an error expansion in powers of
// h = 1/n (Neville tableau over a handful of geometric nodes).

#include <cstddef>
#include <vector>

#include "heunc/errors.hpp"
#include "heunc/scalar.hpp"

namespace heunc {

struct Extrapolation {
    Cx limit{};
    double agreement = 0.0; // |last - previous| across the final two levels
    std::vector<Cx> diagonal; // tableau diagonal, level 0 first
};

/// Polynomial extrapolation h -> 0 of values f(h_i); hs must be distinct.
inline Extrapolation richardson(const std::vector<Cx>& values,
                                const std::vector<double>& hs) {
    if (values.size() != hs.size() || values.size() < 2)
        throw Error("richardson: need at least two matching nodes");
    std::vector<Cx> row = values;
    Extrapolation out;
    out.diagonal.push_back(row.front());
    Cx prev_diag = row.front();
    const std::size_t n = values.size();
    for (std::size_t lvl = 1; lvl < n; ++lvl) {
        std::vector<Cx> next(n - lvl);
        for (std::size_t i = 0; i + lvl < n; ++i) {
            const double hi = hs[i], hj = hs[i + lvl];
            next[i] = (hi * row[i + 1] - hj * row[i]) / (hi - hj);
        }
        row = std::move(next);
        out.diagonal.push_back(row.front());
        out.agreement = std::abs(row.front() - prev_diag);
        prev_diag = row.front();
    }
    out.limit = row.front();
    return out;
}

} // namespace heunc
