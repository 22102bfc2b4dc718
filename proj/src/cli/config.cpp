#include "cli/config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace stsc::cli {

void SweepSpec::validate() const {
    if (schemes.empty()) throw std::invalid_argument("config: at least one scheme required");
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (snr_step <= 0.0) throw std::invalid_argument("config: snr_step must be positive");
    if (snr_start > snr_stop) throw std::invalid_argument("config: snr_start must be <= snr_stop");
    if (n_r < 1) throw std::invalid_argument("config: nr must be >= 1");
    if (fragment_bits != 4) throw std::invalid_argument("config: fragment_bits must be 4");
    if (out.empty()) throw std::invalid_argument("config: output path must not be empty");
}

std::vector<double> SweepSpec::snr_list() const {
    std::vector<double> list;
    for (double v = snr_start; v <= snr_stop + 1e-9; v += snr_step) list.push_back(v);
    return list;
}

SimConfig SweepSpec::sim_config(Scheme s) const {
    SimConfig cfg;
    cfg.scheme = s;
    cfg.fading = fading;
    cfg.snr_db = snr_list();
    cfg.trials = trials;
    cfg.fragment_bits = fragment_bits;
    cfg.n_r = n_r;
    cfg.master_seed = seed;
    return cfg;
}

std::string SweepSpec::to_json(int indent) const {
    nlohmann::ordered_json j;
    j["schemes"] = nlohmann::ordered_json::array();
    for (const auto& s : schemes) j["schemes"].push_back(s.name());
    j["fading"] = fading_name(fading);
    j["snr_start"] = snr_start;
    j["snr_stop"] = snr_stop;
    j["snr_step"] = snr_step;
    j["trials"] = trials;
    j["seed"] = seed;
    j["nr"] = n_r;
    j["fragment_bits"] = fragment_bits;
    j["out"] = out;
    return j.dump(indent);
}

namespace {

std::uint64_t as_u64(const nlohmann::json& v, const std::string& key) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    throw std::invalid_argument("config: '" + key + "' must be a non-negative integer");
}

double as_double(const nlohmann::json& v, const std::string& key) {
    if (!v.is_number()) throw std::invalid_argument("config: '" + key + "' must be a number");
    return v.get<double>();
}

std::string as_string(const nlohmann::json& v, const std::string& key) {
    if (!v.is_string()) throw std::invalid_argument("config: '" + key + "' must be a string");
    return v.get<std::string>();
}

}  // namespace

SweepSpec SweepSpec::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    nlohmann::json root;
    try {
        in >> root;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config: " + path + " is not valid JSON: " + e.what());
    }
    if (!root.is_object()) throw std::invalid_argument("config: top level must be an object");
    if (root.contains("config")) {
        // Sweep sidecar: re-run from its embedded effective config.
        root = root["config"];
        if (!root.is_object()) throw std::invalid_argument("config: 'config' must be an object");
    }

    static const std::set<std::string> known{"schemes", "fading",  "snr_start",
                                             "snr_stop", "snr_step", "trials",
                                             "seed",     "nr",      "fragment_bits",
                                             "out"};
    for (const auto& [key, value] : root.items())
        if (!known.contains(key)) throw std::invalid_argument("config: unknown key '" + key + "'");

    SweepSpec spec;
    if (root.contains("schemes")) {
        if (!root["schemes"].is_array() || root["schemes"].empty())
            throw std::invalid_argument("config: 'schemes' must be a non-empty array");
        spec.schemes.clear();
        for (const auto& s : root["schemes"])
            spec.schemes.push_back(Scheme::parse(as_string(s, "schemes")));
    }
    if (root.contains("fading")) spec.fading = fading_parse(as_string(root["fading"], "fading"));
    if (root.contains("snr_start")) spec.snr_start = as_double(root["snr_start"], "snr_start");
    if (root.contains("snr_stop")) spec.snr_stop = as_double(root["snr_stop"], "snr_stop");
    if (root.contains("snr_step")) spec.snr_step = as_double(root["snr_step"], "snr_step");
    if (root.contains("trials")) spec.trials = as_u64(root["trials"], "trials");
    if (root.contains("seed")) spec.seed = as_u64(root["seed"], "seed");
    if (root.contains("nr")) spec.n_r = static_cast<int>(as_u64(root["nr"], "nr"));
    if (root.contains("fragment_bits"))
        spec.fragment_bits = static_cast<int>(as_u64(root["fragment_bits"], "fragment_bits"));
    if (root.contains("out")) spec.out = as_string(root["out"], "out");
    return spec;
}

}  // namespace stsc::cli
