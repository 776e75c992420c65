// Command-line front end: instance generation, solving, oracle verification
// and benchmarking for resource allocation under disjoint interval bounds.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rapdibc/generate.hpp"
#include "rapdibc/integer.hpp"
#include "rapdibc/json_io.hpp"
#include "rapdibc/oracle.hpp"
#include "rapdibc/rng.hpp"
#include "rapdibc/sweep.hpp"
#include "rapdibc/tolerance.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_infeasible = 3;
constexpr int exit_mismatch = 4;

using namespace rapdibc;

struct SolveArgs {
    std::string instance_path;
    std::string out_path;
    std::string objective_override;
    bool integer = false;
    unsigned threads = 1;
};

int run_solve(const SolveArgs& args) {
    InstanceFile file = read_instance_file(args.instance_path);
    Objective phi = args.objective_override.empty()
                        ? file.objective
                        : parse_objective(args.objective_override);
    Canonicalized canon = canonicalize(file.raw);
    const Instance& inst = canon.instance;

    SolveOptions options;
    options.threads = args.threads;
    const bool integer_mode = args.integer || inst.integer_data();
    Solution sol = integer_mode ? solve_integer(inst, phi, inst.resource(), options)
                                : solve(inst, phi, inst.resource(), options);

    SolutionFile out;
    out.status = sol.status == SolveStatus::optimal ? "optimal" : "infeasible";
    out.objective = sol.objective;
    out.lambda = sol.lambda;
    out.partition = sol.partition;
    out.x = to_original_order(sol.x, canon.permutation);

    if (args.out_path.empty())
        std::cout << solution_to_json(out);
    else
        write_solution_file(args.out_path, out);
    return sol.status == SolveStatus::optimal ? exit_ok : exit_infeasible;
}

struct VerifyArgs {
    std::string instance_path;
    std::string objective_override;
    std::uint64_t cap = 1'000'000;
};

int run_verify(const VerifyArgs& args) {
    InstanceFile file = read_instance_file(args.instance_path);
    Objective phi = args.objective_override.empty()
                        ? file.objective
                        : parse_objective(args.objective_override);
    Canonicalized canon = canonicalize(file.raw);
    const Instance& inst = canon.instance;
    const double R = inst.resource();
    OracleOptions oracle_opts{args.cap};

    Solution sweep_sol = solve(inst, phi, R);
    const bool sweep_feasible = sweep_sol.status == SolveStatus::optimal;
    std::printf("sweep      : %s  value=%.12g\n",
                sweep_feasible ? "optimal" : "infeasible", sweep_sol.objective);

    bool ok = true;
    auto compare = [&](const char* name, const Solution& ref) {
        const bool ref_feasible = ref.status == SolveStatus::optimal;
        bool agree = ref_feasible == sweep_feasible;
        if (agree && ref_feasible)
            agree = std::abs(ref.objective - sweep_sol.objective) <=
                    1e-8 * std::max(1.0, std::abs(ref.objective));
        std::printf("%s: %s  value=%.12g  -> %s\n", name,
                    ref_feasible ? "optimal" : "infeasible", ref.objective,
                    agree ? "agree" : "MISMATCH");
        ok = ok && agree;
    };

    try {
        compare("enumerative", algorithm_enumerative(inst, phi, R, oracle_opts));
    } catch (const CapExceeded&) {
        std::printf("enumerative: skipped (over cap)\n");
    }
    try {
        compare("brute force", brute_force(inst, phi, R, oracle_opts));
    } catch (const CapExceeded&) {
        std::printf("brute force: skipped (over cap)\n");
    }

    if (inst.integer_data()) {
        Solution int_sol = solve_integer(inst, phi, R);
        const bool int_feasible = int_sol.status == SolveStatus::optimal;
        std::printf("integer    : %s  value=%.12g\n",
                    int_feasible ? "optimal" : "infeasible", int_sol.objective);
        try {
            Solution ref = brute_force_integer(inst, phi, R, oracle_opts);
            const bool ref_feasible = ref.status == SolveStatus::optimal;
            bool agree = ref_feasible == int_feasible &&
                         (!ref_feasible || ref.objective == int_sol.objective);
            std::printf("integer bf : %s  value=%.12g  -> %s\n",
                        ref_feasible ? "optimal" : "infeasible", ref.objective,
                        agree ? "agree" : "MISMATCH");
            ok = ok && agree;
        } catch (const CapExceeded&) {
            std::printf("integer bf : skipped (over cap)\n");
        }
    }
    return ok ? exit_ok : exit_mismatch;
}

struct BenchArgs {
    int m = 2;
    std::vector<int> sizes;
    int reps = 3;
    std::uint64_t seed = 1;
    std::string out_path;
    std::string objective = "quadratic";
};

int run_bench(const BenchArgs& args) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!args.out_path.empty()) {
        file.open(args.out_path, std::ios::binary);
        if (!file) throw Error("cannot write '" + args.out_path + "'");
        out = &file;
    }
    Objective phi = parse_objective(args.objective);

    *out << "m,n,rep,seed,wall_seconds,objective,status\n";
    char row[160];
    for (int n : args.sizes) {
        for (int rep = 0; rep < args.reps; ++rep) {
            const std::uint64_t seed = derive_seed(args.seed, args.m, n, rep);
            SyntheticGenConfig cfg;
            cfg.n = n;
            cfg.m = args.m;
            cfg.seed = seed;
            Instance inst = gen_synthetic(cfg);

            const auto start = std::chrono::steady_clock::now();
            Solution sol = solve(inst, phi, inst.resource());
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - start;

            std::snprintf(row, sizeof(row), "%d,%d,%d,%llu,%.6e,%.12g,%s\n", args.m, n,
                          rep, static_cast<unsigned long long>(seed), elapsed.count(),
                          sol.objective,
                          sol.status == SolveStatus::optimal ? "optimal" : "infeasible");
            *out << row;
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solver for separable convex resource allocation with disjoint "
                 "interval bound constraints"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* cmd_solve = app.add_subcommand("solve", "Solve an instance file");
    cmd_solve->add_option("instance", solve_args.instance_path, "Instance JSON file")
        ->required();
    cmd_solve->add_flag("--integer", solve_args.integer,
                        "Solve for integer variables (implied by the instance's "
                        "integer flag)");
    cmd_solve->add_option("--objective", solve_args.objective_override,
                          "Override the objective: q|quadratic|abs|hinge");
    cmd_solve->add_option("--out", solve_args.out_path,
                          "Write the solution JSON here instead of stdout");
    cmd_solve->add_option("--threads", solve_args.threads,
                          "Worker threads for the partition sweeps");

    CLI::App* cmd_gen = app.add_subcommand("generate", "Generate an instance file");
    cmd_gen->require_subcommand(1);

    SyntheticGenConfig syn_cfg;
    std::string gen_out;
    std::string gen_objective = "quadratic";
    CLI::App* cmd_syn = cmd_gen->add_subcommand("synthetic", "Random structured instance");
    cmd_syn->add_option("--n", syn_cfg.n, "Number of variables")->required();
    cmd_syn->add_option("--m", syn_cfg.m, "Intervals per variable (>= 2)")->required();
    cmd_syn->add_option("--seed", syn_cfg.seed, "PRNG seed");
    cmd_syn->add_option("--resample-limit", syn_cfg.resample_limit,
                        "Attempts before giving up on an admissible draw");
    cmd_syn->add_option("--objective", gen_objective, "Objective stored in the file");
    cmd_syn->add_option("--out", gen_out, "Output path")->required();

    EvGenConfig ev_cfg;
    std::string ev_profile_path;
    CLI::App* cmd_ev = cmd_gen->add_subcommand(
        "ev", "EV charging schedule with a minimum charging threshold");
    cmd_ev->add_option("--T", ev_cfg.slots, "Number of time slots");
    cmd_ev->add_option("--dt", ev_cfg.dt_hours, "Slot length in hours");
    cmd_ev->add_option("--xmin", ev_cfg.x_min_kw, "Minimum charging rate (kW)");
    cmd_ev->add_option("--xmax", ev_cfg.x_max_kw, "Maximum charging rate (kW)");
    cmd_ev->add_option("--R", ev_cfg.demand_wh, "Energy demand (Wh)");
    cmd_ev->add_option("--seed", ev_cfg.seed, "PRNG seed for the load profile");
    cmd_ev->add_option("--profile", ev_profile_path,
                       "JSON array with one static-load value (kW) per slot");
    cmd_ev->add_option("--objective", gen_objective, "Objective stored in the file");
    cmd_ev->add_option("--out", gen_out, "Output path")->required();

    VerifyArgs verify_args;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "Cross-check the solver against the oracles");
    cmd_verify->add_option("instance", verify_args.instance_path, "Instance JSON file")
        ->required();
    cmd_verify->add_option("--objective", verify_args.objective_override,
                           "Override the objective");
    cmd_verify->add_option("--cap", verify_args.cap, "Oracle work cap");

    BenchArgs bench_args;
    CLI::App* cmd_bench = app.add_subcommand("bench", "Time the solver; emit CSV");
    cmd_bench->add_option("--m", bench_args.m, "Intervals per variable")->required();
    cmd_bench->add_option("--sizes", bench_args.sizes, "Variable counts to time")
        ->required()
        ->delimiter(',');
    cmd_bench->add_option("--reps", bench_args.reps, "Repetitions per size");
    cmd_bench->add_option("--seed", bench_args.seed, "Base seed");
    cmd_bench->add_option("--objective", bench_args.objective, "Objective");
    cmd_bench->add_option("--out", bench_args.out_path, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_bad_input;
    }

    try {
        if (cmd_solve->parsed()) return run_solve(solve_args);
        if (cmd_gen->parsed()) {
            Objective phi = parse_objective(gen_objective);
            if (cmd_syn->parsed()) {
                write_instance_file(gen_out, gen_synthetic(syn_cfg), phi);
            } else {
                if (!ev_profile_path.empty()) {
                    std::ifstream in(ev_profile_path);
                    if (!in) throw ParseError("cannot open profile '" + ev_profile_path + "'");
                    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
                    if (j.is_discarded() || !j.is_array())
                        throw ParseError("profile must be a JSON array of numbers");
                    ev_cfg.static_load = j.get<std::vector<double>>();
                }
                write_instance_file(gen_out, gen_ev(ev_cfg), phi);
            }
            return exit_ok;
        }
        if (cmd_verify->parsed()) return run_verify(verify_args);
        if (cmd_bench->parsed()) return run_bench(bench_args);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const LengthMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const MalformedInterval& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const InvalidValue& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const NonIntegralData& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const NotAdmissible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_ok;
}
