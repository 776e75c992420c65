#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rapdibc/errors.hpp"
#include "rapdibc/objective.hpp"

namespace rapdibc {

// Problem data as supplied by the caller, in arbitrary variable order.
//
// Each variable i may take a value in the union of m closed intervals.  The
// interior interval bounds are shared across variables; only the lower bound
// of the first interval and the upper bound of the last interval vary per
// variable:
//
//   interval 0:      [first_lower[i], shared_upper[0]]
//   interval j:      [shared_lower[j-1], shared_upper[j]]   (0 < j < m-1)
//   interval m-1:    [shared_lower[m-2], last_upper[i]]
//
// For m == 1 the single interval is [first_lower[i], last_upper[i]] and the
// shared vectors are empty.
struct RawInstance {
    int n = 0;
    int m = 0;
    std::vector<double> b;             // shift vector, length n
    std::vector<double> first_lower;   // length n
    std::vector<double> last_upper;    // length n
    std::vector<double> shared_lower;  // length m-1
    std::vector<double> shared_upper;  // length m-1
    double resource = 0.0;
    bool integer_data = false;
};

// Structural conditions on the first/last interval lengths.  The solver
// requires (f1 or f2) and (l1 or l2); for m == 1 all four hold by convention.
struct CaseFlags {
    bool f1 = false;  // first-interval lower bounds non-decreasing in i
    bool f2 = false;  // every first interval at least as long as the widest gap
    bool l1 = false;  // last-interval upper bounds non-increasing in i
    bool l2 = false;  // every last interval at least as long as the widest gap

    bool admissible() const { return (f1 || f2) && (l1 || l2); }
};

// Instance whose structural case conditions fail on both sides.
struct NotAdmissible : Error {
    CaseFlags flags;
    explicit NotAdmissible(CaseFlags fl)
        : Error("instance is not admissible: neither first-interval nor "
                "last-interval case condition holds"),
          flags(fl) {}
};

class Instance;
struct Canonicalized;
Canonicalized canonicalize(const RawInstance& raw);

// Validated problem data in canonical variable order (b non-increasing).
// Immutable after construction; cheap to share across solver runs.
class Instance {
public:
    int n() const { return n_; }
    int m() const { return m_; }
    double resource() const { return resource_; }
    bool integer_data() const { return integer_data_; }

    double b(int i) const { return b_[i]; }
    double first_lower(int i) const { return first_lower_[i]; }
    double last_upper(int i) const { return last_upper_[i]; }

    // Bounds of interval j (0-based) for variable i.
    double lower(int i, int j) const {
        return j == 0 ? first_lower_[i] : shared_lower_[j - 1];
    }
    double upper(int i, int j) const {
        return j == m_ - 1 ? last_upper_[i] : shared_upper_[j];
    }

    const std::vector<double>& b() const { return b_; }
    const std::vector<double>& first_lower() const { return first_lower_; }
    const std::vector<double>& last_upper() const { return last_upper_; }
    const std::vector<double>& shared_lower() const { return shared_lower_; }
    const std::vector<double>& shared_upper() const { return shared_upper_; }

    RawInstance to_raw() const;

private:
    Instance() = default;
    friend struct Canonicalized;
    friend Canonicalized canonicalize(const RawInstance& raw);

    int n_ = 0;
    int m_ = 0;
    std::vector<double> b_, first_lower_, last_upper_;
    std::vector<double> shared_lower_, shared_upper_;
    double resource_ = 0.0;
    bool integer_data_ = false;
};

// Result of canonicalize: sorts variables by b non-increasing (stable, so
// equal shifts keep their original relative order), co-permuting the
// per-variable bounds, and checks interval well-formedness.  Throws
// LengthMismatch, MalformedInterval, InvalidValue or NonIntegralData.
struct Canonicalized {
    Instance instance;
    // permutation[k] is the original index of the variable at canonical
    // position k; use it to map solutions back to the caller's order.
    std::vector<int> permutation;
};

// The four case flags, computed without admissibility enforcement.
CaseFlags case_flags(const Instance& inst);

// Same flags, but throws NotAdmissible when neither an F-case nor an L-case
// holds.  The sweep solver requires a validated instance.
CaseFlags validate(const Instance& inst);

// Index of the interval of variable i containing v (within the shared
// comparison tolerance), or nullopt when v falls in a gap or outside the
// variable's range.
std::optional<int> interval_of(const Instance& inst, int i, double v);

// Sum of phi(x_i + b_i); does not check feasibility.
double eval_objective(const Instance& inst, Objective phi,
                      const std::vector<double>& x);

}  // namespace rapdibc
