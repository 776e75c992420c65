#include "rapdibc/generate.hpp"

#include <cmath>

#include "rapdibc/rng.hpp"

namespace rapdibc {

Instance gen_synthetic(const SyntheticGenConfig& cfg) {
    if (cfg.n < 1) throw InvalidValue("synthetic generator needs n >= 1");
    if (cfg.m < 2) throw InvalidValue("synthetic generator needs m >= 2");
    const int n = cfg.n;
    const int m = cfg.m;

    Rng rng(cfg.seed);
    for (int attempt = 0; attempt <= cfg.resample_limit; ++attempt) {
        RawInstance raw;
        raw.n = n;
        raw.m = m;

        // Interior structure: gap widths first, then interior interval widths.
        std::vector<double> gap(m - 1), width(m - 1, 0.0);
        for (int j = 0; j < m - 1; ++j) gap[j] = rng.uniform();
        for (int j = 1; j < m - 1; ++j) width[j] = rng.uniform();

        raw.shared_upper.resize(m - 1);
        raw.shared_lower.resize(m - 1);
        raw.shared_upper[0] = 2.0;
        for (int j = 0; j < m - 1; ++j) {
            raw.shared_lower[j] = raw.shared_upper[j] + gap[j];
            if (j + 1 < m - 1) raw.shared_upper[j + 1] = raw.shared_lower[j] + width[j + 1];
        }
        const double last_lower = raw.shared_lower[m - 2];

        // First-interval lower bounds drift downward from variable n-1; the
        // last-interval upper bounds drift downward from variable 0.
        raw.first_lower.assign(n, 1.0);
        for (int i = n - 2; i >= 0; --i)
            raw.first_lower[i] = raw.first_lower[i + 1] - rng.uniform(0.0, 1.0 / n);
        raw.last_upper.assign(n, last_lower + 1.0);
        for (int i = 1; i < n; ++i)
            raw.last_upper[i] = raw.last_upper[i - 1] - rng.uniform(0.0, 1.0 / n);

        double sum_lower = 0.0, sum_upper = 0.0;
        for (int i = 0; i < n; ++i) {
            sum_lower += raw.first_lower[i];
            sum_upper += raw.last_upper[i];
        }
        raw.resource = rng.uniform(sum_lower, sum_upper);

        raw.b.assign(n, 0.0);
        for (int i = n - 2; i >= 0; --i) raw.b[i] = raw.b[i + 1] + rng.uniform();

        try {
            Canonicalized canon = canonicalize(raw);
            validate(canon.instance);
            return std::move(canon.instance);
        } catch (const Error&) {
            // Degenerate draw (e.g. zero-width gap); try again.
        }
    }
    throw GenerationFailed("no admissible instance within " +
                           std::to_string(cfg.resample_limit) + " resampling attempts");
}

std::vector<double> synthetic_load_profile(int slots, double dt_hours,
                                           std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> p(slots);
    for (int t = 0; t < slots; ++t) {
        const double hour = std::fmod(18.0 + (t + 0.5) * dt_hours, 24.0);
        auto peak = [&](double center, double width) {
            double d = std::abs(hour - center);
            d = std::min(d, 24.0 - d);  // circular distance on the day
            return std::exp(-(d * d) / (2.0 * width * width));
        };
        p[t] = 0.25 + 0.9 * peak(19.5, 2.0) + 0.35 * peak(7.5, 1.5) +
               rng.uniform(0.0, 0.08);
    }
    return p;
}

Instance gen_ev(const EvGenConfig& cfg) {
    if (cfg.slots < 1) throw InvalidValue("EV generator needs at least one slot");
    if (!(cfg.x_min_kw > 0.0) || cfg.x_min_kw > cfg.x_max_kw)
        throw InvalidValue("EV generator needs 0 < x_min <= x_max");
    if (cfg.demand_wh < 0.0) throw InvalidValue("EV demand must be nonnegative");

    const int T = cfg.slots;
    // Fold the slot length into the resource: sum of per-slot powers (kW).
    const double resource = cfg.demand_wh / 1000.0 / cfg.dt_hours;
    if (resource > T * cfg.x_max_kw + 1e-9)
        throw InvalidValue("demand exceeds what the horizon can deliver");

    std::vector<double> load;
    if (cfg.static_load) {
        load = *cfg.static_load;
        if (static_cast<int>(load.size()) != T)
            throw LengthMismatch("static load profile must have one value per slot");
    } else {
        load = synthetic_load_profile(T, cfg.dt_hours, cfg.seed);
    }

    RawInstance raw;
    raw.n = T;
    raw.m = 2;
    raw.b = std::move(load);
    raw.first_lower.assign(T, 0.0);   // idle slot
    raw.last_upper.assign(T, cfg.x_max_kw);
    raw.shared_upper = {0.0};         // first interval is the single point {0}
    raw.shared_lower = {cfg.x_min_kw};
    raw.resource = resource;
    raw.integer_data = false;

    return std::move(canonicalize(raw).instance);
}

}  // namespace rapdibc
