#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rapdibc/instance.hpp"

namespace rapdibc {

// Randomized instances with shared interior intervals, per-variable first
// lower / last upper bounds drifting by at most 1/n between neighbours, and a
// resource value drawn from the feasible range.
struct SyntheticGenConfig {
    int n = 10;
    int m = 2;
    std::uint64_t seed = 0;
    int resample_limit = 100;
};

Instance gen_synthetic(const SyntheticGenConfig& cfg);

// EV charging schedule: per-slot power is either 0 or within
// [x_min_kw, x_max_kw]; the energy demand (Wh) is folded into the resource so
// the allocation constraint is a plain sum of per-slot powers.
struct EvGenConfig {
    int slots = 56;             // T
    double dt_hours = 0.25;
    double x_min_kw = 1.1;
    double x_max_kw = 6.6;
    double demand_wh = 19'500;  // R
    std::uint64_t seed = 0;
    // Static household load per slot (kW). When absent, a seeded synthetic
    // daily profile is used.
    std::optional<std::vector<double>> static_load;
};

Instance gen_ev(const EvGenConfig& cfg);

// The synthetic daily load profile used when no measurements are supplied:
// base load plus morning and evening peaks plus uniform noise. The horizon
// starts at 18:00.
std::vector<double> synthetic_load_profile(int slots, double dt_hours,
                                           std::uint64_t seed);

}  // namespace rapdibc
