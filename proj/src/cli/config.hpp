#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stsc/sim.hpp"

namespace stsc::cli {

// Effective sweep configuration: JSON config file keys mirror these fields,
// command-line flags override file values.
struct SweepSpec {
    std::vector<Scheme> schemes{Scheme{SchemeKind::Ssm}, Scheme{SchemeKind::Dsm},
                                Scheme{SchemeKind::MacGolden, true}};
    FadingModel fading = FadingModel::Slow;
    double snr_start = 0.0;
    double snr_stop = 30.0;
    double snr_step = 5.0;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 42;
    int n_r = 2;
    int fragment_bits = 4;
    std::string out = "sweep.csv";

    void validate() const;
    std::vector<double> snr_list() const;
    SimConfig sim_config(Scheme s) const;

    // Flat JSON object mirroring the fields above.
    std::string to_json(int indent = 2) const;

    // Accepts either a flat config object or a sweep sidecar (the config is
    // then taken from its "config" member).
    static SweepSpec from_json_file(const std::string& path);
};

}  // namespace stsc::cli
