#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rapdibc {

// Separable convex cost applied to each shifted allocation x_i + b_i.
enum class Objective {
    quadratic,       // y^2
    absolute_value,  // |y|
    hinge_max,       // max(0, y)
};

inline double eval(Objective phi, double y) {
    switch (phi) {
        case Objective::quadratic: return y * y;
        case Objective::absolute_value: return std::abs(y);
        case Objective::hinge_max: return std::max(0.0, y);
    }
    return 0.0;  // unreachable
}

inline std::string_view name(Objective phi) {
    switch (phi) {
        case Objective::quadratic: return "quadratic";
        case Objective::absolute_value: return "abs";
        case Objective::hinge_max: return "hinge";
    }
    return "?";
}

inline Objective parse_objective(std::string_view s) {
    if (s == "quadratic" || s == "q") return Objective::quadratic;
    if (s == "abs") return Objective::absolute_value;
    if (s == "hinge") return Objective::hinge_max;
    throw std::invalid_argument("unknown objective '" + std::string(s) +
                                "' (expected quadratic|abs|hinge)");
}

}  // namespace rapdibc
