#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stsc/channel.hpp"
#include "stsc/decode.hpp"
#include "stsc/stcode.hpp"

namespace stsc {

struct SimConfig {
    Scheme scheme;
    FadingModel fading = FadingModel::Slow;
    std::vector<double> snr_db;
    std::uint64_t trials = 10000;
    int fragment_bits = 4;
    int n_r = 2;
    std::uint64_t master_seed = 42;
    // Testing override: forces noise_std to 0 regardless of SNR.
    bool noiseless = false;

    void validate() const;
};

struct TrialRecord {
    Bits b1, b2;
    Bits b1_hat, b2_hat;
    Bits repaired;  // b1_hat XOR b2_hat
    int bit_errors = 0;
    bool frame_error = false;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct SweepRow {
    std::string scheme;
    std::string fading;
    double snr_db = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t bit_errors = 0;
    double ber = 0.0;
    std::uint64_t frame_errors = 0;
    double fer = 0.0;
    double ber_ci_low = 0.0;
    double ber_ci_high = 0.0;
    std::uint64_t seed = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
};

// Per-trial generator seed: master_seed with the scheme id, the snr_db bit
// pattern and the trial index folded in through splitmix64. The fading model
// is deliberately not folded in, so slow and fast runs of the same config
// share per-trial streams (a T=1 scheme then produces bit-identical records
// under both models).
std::uint64_t trial_seed(std::uint64_t master_seed, Scheme scheme, double snr_db,
                         std::uint64_t trial_index);

// One repair transmission: draw the two helper fragments, encode, fade,
// decode, XOR-repair, tally bit errors against the true XOR.
TrialRecord run_trial(const SimConfig& config, double snr_db, std::uint64_t trial_index);

// Monte Carlo sweep over config.snr_db, parallelized over trials. Results
// are bit-identical for any worker count.
SweepResult run_sweep(const SimConfig& config);

double bits_per_channel_use(Scheme s);

// 95% Wilson score interval for x successes in n Bernoulli trials.
std::pair<double, double> wilson_interval(std::uint64_t x, std::uint64_t n);

// Worker count: STSC_WORKERS when set (positive integer), else all cores.
unsigned resolve_workers();

// Shared normalized codebooks for the built-in schemes.
const Codebook& builtin_codebook(Scheme s);

// Mean transmitted energy per channel use per helper over random fragments.
double measure_mean_energy(Scheme s, std::uint64_t trials, std::uint64_t seed);

// CSV serialization; floating fields use 10 significant digits.
std::string sweep_csv_header();
std::string sweep_csv(const SweepResult& result);

}  // namespace stsc
