#include "rapdibc/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rapdibc/tolerance.hpp"

namespace rapdibc {

namespace {

void require_finite(const std::vector<double>& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x)) throw InvalidValue(std::string(what) + " contains a non-finite value");
}

void require_integral(const std::vector<double>& v, const char* what) {
    for (double x : v)
        if (x != std::floor(x))
            throw NonIntegralData(std::string(what) + " must be integer valued for an integer instance");
}

}  // namespace

RawInstance Instance::to_raw() const {
    RawInstance raw;
    raw.n = n_;
    raw.m = m_;
    raw.b = b_;
    raw.first_lower = first_lower_;
    raw.last_upper = last_upper_;
    raw.shared_lower = shared_lower_;
    raw.shared_upper = shared_upper_;
    raw.resource = resource_;
    raw.integer_data = integer_data_;
    return raw;
}

Canonicalized canonicalize(const RawInstance& raw) {
    const int n = raw.n;
    const int m = raw.m;
    if (n < 1) throw InvalidValue("instance needs at least one variable");
    if (m < 1) throw InvalidValue("instance needs at least one interval per variable");

    auto check_len = [&](const std::vector<double>& v, int want, const char* what) {
        if (static_cast<int>(v.size()) != want)
            throw LengthMismatch(std::string(what) + " has length " +
                                 std::to_string(v.size()) + ", expected " +
                                 std::to_string(want));
    };
    check_len(raw.b, n, "b");
    check_len(raw.first_lower, n, "first_lower");
    check_len(raw.last_upper, n, "last_upper");
    check_len(raw.shared_lower, m - 1, "shared_lower");
    check_len(raw.shared_upper, m - 1, "shared_upper");

    require_finite(raw.b, "b");
    require_finite(raw.first_lower, "first_lower");
    require_finite(raw.last_upper, "last_upper");
    require_finite(raw.shared_lower, "shared_lower");
    require_finite(raw.shared_upper, "shared_upper");
    if (!std::isfinite(raw.resource)) throw InvalidValue("resource is not finite");

    if (raw.integer_data) {
        require_integral(raw.b, "b");
        require_integral(raw.first_lower, "first_lower");
        require_integral(raw.last_upper, "last_upper");
        require_integral(raw.shared_lower, "shared_lower");
        require_integral(raw.shared_upper, "shared_upper");
        if (raw.resource != std::floor(raw.resource))
            throw NonIntegralData("resource must be integer valued for an integer instance");
    }

    // Shared interval chain: within-interval lower <= upper, strict gaps
    // between consecutive intervals.
    for (int j = 0; j + 1 < m - 1; ++j)
        if (!(raw.shared_lower[j] <= raw.shared_upper[j + 1]))
            throw MalformedInterval("interior interval " + std::to_string(j + 1) +
                                    " has lower > upper");
    for (int j = 0; j < m - 1; ++j)
        if (!(raw.shared_upper[j] < raw.shared_lower[j]))
            throw MalformedInterval("intervals " + std::to_string(j) + " and " +
                                    std::to_string(j + 1) +
                                    " overlap or touch (gaps must be strict)");

    for (int i = 0; i < n; ++i) {
        const double first_upper = m == 1 ? raw.last_upper[i] : raw.shared_upper[0];
        if (!(raw.first_lower[i] <= first_upper))
            throw MalformedInterval("variable " + std::to_string(i) +
                                    ": first interval has lower > upper");
        if (m > 1 && !(raw.shared_lower[m - 2] <= raw.last_upper[i]))
            throw MalformedInterval("variable " + std::to_string(i) +
                                    ": last interval has lower > upper");
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return raw.b[a] > raw.b[b]; });

    Canonicalized out;
    Instance& inst = out.instance;
    inst.n_ = n;
    inst.m_ = m;
    inst.b_.resize(n);
    inst.first_lower_.resize(n);
    inst.last_upper_.resize(n);
    for (int k = 0; k < n; ++k) {
        inst.b_[k] = raw.b[perm[k]];
        inst.first_lower_[k] = raw.first_lower[perm[k]];
        inst.last_upper_[k] = raw.last_upper[perm[k]];
    }
    inst.shared_lower_ = raw.shared_lower;
    inst.shared_upper_ = raw.shared_upper;
    inst.resource_ = raw.resource;
    inst.integer_data_ = raw.integer_data;
    out.permutation = std::move(perm);
    return out;
}

CaseFlags case_flags(const Instance& inst) {
    CaseFlags flags;
    const int n = inst.n();
    const int m = inst.m();
    if (m == 1) {
        flags.f1 = flags.f2 = flags.l1 = flags.l2 = true;  // no gaps exist
        return flags;
    }

    double max_gap = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < m - 1; ++j)
        max_gap = std::max(max_gap, inst.shared_lower()[j] - inst.shared_upper()[j]);

    flags.f1 = true;
    flags.l1 = true;
    for (int i = 0; i + 1 < n; ++i) {
        if (inst.first_lower(i) > inst.first_lower(i + 1)) flags.f1 = false;
        if (inst.last_upper(i) < inst.last_upper(i + 1)) flags.l1 = false;
    }

    double min_first_len = std::numeric_limits<double>::infinity();
    double min_last_len = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        min_first_len = std::min(min_first_len, inst.shared_upper()[0] - inst.first_lower(i));
        min_last_len = std::min(min_last_len, inst.last_upper(i) - inst.shared_lower()[m - 2]);
    }
    flags.f2 = min_first_len >= max_gap;
    flags.l2 = min_last_len >= max_gap;
    return flags;
}

CaseFlags validate(const Instance& inst) {
    CaseFlags flags = case_flags(inst);
    if (!flags.admissible()) throw NotAdmissible(flags);
    return flags;
}

std::optional<int> interval_of(const Instance& inst, int i, double v) {
    for (int j = 0; j < inst.m(); ++j) {
        const double lo = inst.lower(i, j);
        const double up = inst.upper(i, j);
        if (v >= lo - tol::margin(v, lo) && v <= up + tol::margin(v, up)) return j;
    }
    return std::nullopt;
}

double eval_objective(const Instance& inst, Objective phi,
                      const std::vector<double>& x) {
    double total = 0.0;
    for (int i = 0; i < inst.n(); ++i) total += eval(phi, x[i] + inst.b(i));
    return total;
}

}  // namespace rapdibc
