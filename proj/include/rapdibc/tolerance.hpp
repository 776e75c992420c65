#pragma once

#include <algorithm>
#include <cmath>

namespace rapdibc::tol {

// One shared comparison tolerance for every place where two real quantities
// are tested for equality (resource balance, feasibility sums, tie detection).
// Relative with an absolute floor so comparisons near zero stay meaningful.
inline constexpr double relative = 1e-9;
inline constexpr double absolute_floor = 1e-12;

inline double margin(double a, double b) {
    return std::max(absolute_floor, relative * std::max(std::abs(a), std::abs(b)));
}

inline bool eq(double a, double b) { return std::abs(a - b) <= margin(a, b); }
inline bool ge(double a, double b) { return a >= b - margin(a, b); }
inline bool le(double a, double b) { return a <= b + margin(a, b); }
inline bool gt(double a, double b) { return a > b + margin(a, b); }
inline bool lt(double a, double b) { return a < b - margin(a, b); }

}  // namespace rapdibc::tol
