#include "rapdibc/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rapdibc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<double> number_array(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number()) throw ParseError(std::string("'") + key + "' must contain numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

}  // namespace

InstanceFile read_instance(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("instance file must be a JSON object");

    InstanceFile file;
    RawInstance& raw = file.raw;
    try {
        if (!j.contains("n") || !j.at("n").is_number_integer())
            throw ParseError("missing or non-integer key 'n'");
        if (!j.contains("m") || !j.at("m").is_number_integer())
            throw ParseError("missing or non-integer key 'm'");
        raw.n = j.at("n").get<int>();
        raw.m = j.at("m").get<int>();
        raw.b = number_array(j, "b");
        raw.first_lower = number_array(j, "first_lower");
        raw.last_upper = number_array(j, "last_upper");
        raw.shared_lower = number_array(j, "shared_lower");
        raw.shared_upper = number_array(j, "shared_upper");
        if (!j.contains("R") || !j.at("R").is_number())
            throw ParseError("missing or non-numeric key 'R'");
        raw.resource = j.at("R").get<double>();
        if (!j.contains("objective") || !j.at("objective").is_string())
            throw ParseError("missing or non-string key 'objective'");
        file.objective = parse_objective(j.at("objective").get<std::string>());
        if (!j.contains("integer") || !j.at("integer").is_boolean())
            throw ParseError("missing or non-boolean key 'integer'");
        raw.integer_data = j.at("integer").get<bool>();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed instance file: ") + e.what());
    }
    return file;
}

InstanceFile read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file '" + path + "'");
    return read_instance(in);
}

std::string instance_to_json(const Instance& inst, Objective objective) {
    ordered_json j;
    j["n"] = inst.n();
    j["m"] = inst.m();
    j["b"] = inst.b();
    j["first_lower"] = inst.first_lower();
    j["last_upper"] = inst.last_upper();
    j["shared_lower"] = inst.shared_lower();
    j["shared_upper"] = inst.shared_upper();
    j["R"] = inst.resource();
    j["objective"] = std::string(name(objective));
    j["integer"] = inst.integer_data();
    return j.dump(2) + "\n";
}

void write_instance_file(const std::string& path, const Instance& inst,
                         Objective objective) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write instance file '" + path + "'");
    out << instance_to_json(inst, objective);
}

std::string solution_to_json(const SolutionFile& sol) {
    ordered_json j;
    j["status"] = sol.status;
    j["objective"] = sol.objective;
    j["lambda"] = sol.lambda;
    j["partition"] = sol.partition;
    j["x"] = sol.x;
    return j.dump(2) + "\n";
}

void write_solution_file(const std::string& path, const SolutionFile& sol) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write solution file '" + path + "'");
    out << solution_to_json(sol);
}

SolutionFile read_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open solution file '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
        SolutionFile sol;
        sol.status = j.at("status").get<std::string>();
        sol.objective = j.at("objective").get<double>();
        sol.lambda = j.at("lambda").get<double>();
        sol.partition = j.at("partition").get<std::vector<int>>();
        sol.x = j.at("x").get<std::vector<double>>();
        return sol;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed solution file: ") + e.what());
    }
}

std::vector<double> to_original_order(const std::vector<double>& canonical,
                                      const std::vector<int>& permutation) {
    std::vector<double> out(canonical.size());
    for (std::size_t k = 0; k < canonical.size(); ++k)
        out[permutation[k]] = canonical[k];
    return out;
}

}  // namespace rapdibc
