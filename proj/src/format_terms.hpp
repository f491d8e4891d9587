#pragma once

// Shared pretty-printer for signed coefficient/label sums: renders
// [(3, "D"), (-2, "C")] as "3D-2C", dropping zero terms, dropping unit
// coefficients, and printing "0" when everything vanishes.

#include <string>
#include <utility>
#include <vector>

#include "hkmod/rational.hpp"

namespace hkmod::detail {

inline std::string format_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
    std::string out;
    for (const auto& [coef, label] : terms) {
        if (coef == 0) continue;
        const Rational mag = abs(coef);
        if (coef < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (mag != 1) out += to_string(mag);
        out += label;
    }
    return out.empty() ? "0" : out;
}

}  // namespace hkmod::detail
