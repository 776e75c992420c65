#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rapdibc/instance.hpp"
#include "rapdibc/objective.hpp"
#include "rapdibc/sweep.hpp"

namespace rapdibc {

// On-disk instance: the problem data plus the objective it should be solved
// under.
struct InstanceFile {
    RawInstance raw;
    Objective objective = Objective::quadratic;
};

InstanceFile read_instance(std::istream& in);
InstanceFile read_instance_file(const std::string& path);

std::string instance_to_json(const Instance& inst, Objective objective);
void write_instance_file(const std::string& path, const Instance& inst,
                         Objective objective);

// Solution serialization. x is expected in the caller's (original) variable
// order; the solver's canonical order is mapped back before writing.
struct SolutionFile {
    std::string status;  // "optimal" | "infeasible"
    double objective = 0.0;
    double lambda = 0.0;
    std::vector<int> partition;
    std::vector<double> x;
};

std::string solution_to_json(const SolutionFile& sol);
void write_solution_file(const std::string& path, const SolutionFile& sol);
SolutionFile read_solution_file(const std::string& path);

// Reorders a canonical-order solution vector back to original indices using
// the permutation produced by canonicalize.
std::vector<double> to_original_order(const std::vector<double>& canonical,
                                      const std::vector<int>& permutation);

}  // namespace rapdibc
