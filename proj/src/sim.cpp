#include "stsc/sim.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "stsc/storage.hpp"

namespace stsc {

void SimConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (fragment_bits != 4)
        throw std::invalid_argument("config: the built-in schemes lift 4-bit fragments");
    if (n_r < 1) throw std::invalid_argument("config: nr must be >= 1");
    if (snr_db.empty()) throw std::invalid_argument("config: empty SNR list");
}

std::uint64_t trial_seed(std::uint64_t master_seed, Scheme scheme, double snr_db,
                         std::uint64_t trial_index) {
    std::uint64_t s = master_seed;
    s = seed_absorb(s, 0x5354534355334443ULL);  // domain tag
    s = seed_absorb(s, scheme.id());
    s = seed_absorb(s, std::bit_cast<std::uint64_t>(snr_db));
    s = seed_absorb(s, trial_index);
    return s;
}

const Codebook& builtin_codebook(Scheme s) {
    switch (s.kind) {
        case SchemeKind::Ssm: {
            static const Codebook cb = enumerate_codebook({SchemeKind::Ssm});
            return cb;
        }
        case SchemeKind::Dsm: {
            static const Codebook cb = enumerate_codebook({SchemeKind::Dsm});
            return cb;
        }
        case SchemeKind::MacGolden:
            if (s.twist) {
                static const Codebook cb = enumerate_codebook({SchemeKind::MacGolden, true});
                return cb;
            } else {
                static const Codebook cb = enumerate_codebook({SchemeKind::MacGolden, false});
                return cb;
            }
    }
    throw std::logic_error("builtin_codebook: bad scheme");
}

namespace {

Bits draw_bits(Rng& rng, int n) {
    Bits out(static_cast<std::size_t>(n));
    for (auto& b : out) b = static_cast<std::uint8_t>(rng.next_bit());
    return out;
}

// Trial draw order: fragments, then channel, then noise inside transmit.
TrialRecord run_trial_impl(const SimConfig& cfg, double snr_db, std::uint64_t trial_index,
                           const Codebook& cb, MlDecoder& decoder) {
    Rng rng(trial_seed(cfg.master_seed, cfg.scheme, snr_db, trial_index));

    TrialRecord rec;
    rec.b1 = draw_bits(rng, cfg.fragment_bits);
    rec.b2 = draw_bits(rng, cfg.fragment_bits);

    ChannelRealization realization = draw_channel(cfg.n_r, cfg.scheme.rows_total(),
                                                  cfg.scheme.channel_uses(), cfg.fading, rng);
    realization.noise_std =
        cfg.noiseless ? 0.0 : noise_std_from_snr(snr_db, cfg.scheme.helpers());

    const Codeword& cw = cb.at(rec.b1, rec.b2);
    const ReceivedBlock received = transmit(cw.matrix, realization, rng);
    const DecodeResult decoded = decoder.decode(received.y, realization);

    rec.b1_hat = decoded.b1;
    rec.b2_hat = decoded.b2;
    rec.repaired = repair({rec.b1_hat, rec.b2_hat}, /*failed_id=*/1, /*d=*/2).bits;
    const Bits truth = xor_bits(rec.b1, rec.b2);
    rec.bit_errors = static_cast<int>(hamming(rec.repaired, truth));
    rec.frame_error = rec.bit_errors > 0;
    return rec;
}

}  // namespace

TrialRecord run_trial(const SimConfig& config, double snr_db, std::uint64_t trial_index) {
    config.validate();
    const Codebook& cb = builtin_codebook(config.scheme);
    MlDecoder decoder(cb);
    return run_trial_impl(config, snr_db, trial_index, cb, decoder);
}

unsigned resolve_workers() {
    const char* env = std::getenv("STSC_WORKERS");
    if (env == nullptr || *env == '\0') {
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : hw;
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 4096)
        throw std::invalid_argument("STSC_WORKERS must be a positive integer");
    return static_cast<unsigned>(v);
}

std::pair<double, double> wilson_interval(std::uint64_t x, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("wilson_interval: n must be positive");
    constexpr double z = 1.959963984540054;  // 97.5% normal quantile
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(x) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    // The bound is exact at the extremes; don't let rounding pull it inward.
    const double low = x == 0 ? 0.0 : std::max(0.0, center - half);
    const double high = x == n ? 1.0 : std::min(1.0, center + half);
    return {low, high};
}

SweepResult run_sweep(const SimConfig& config) {
    config.validate();
    const Codebook& cb = builtin_codebook(config.scheme);
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(), config.trials));

    SweepResult result;
    for (double snr : config.snr_db) {
        std::vector<std::uint64_t> bit_err(workers, 0);
        std::vector<std::uint64_t> frame_err(workers, 0);

        const auto worker_body = [&](unsigned w) {
            MlDecoder decoder(cb);
            const std::uint64_t chunk = (config.trials + workers - 1) / workers;
            const std::uint64_t lo = w * chunk;
            const std::uint64_t hi = std::min<std::uint64_t>(config.trials, lo + chunk);
            std::uint64_t be = 0, fe = 0;
            for (std::uint64_t i = lo; i < hi; ++i) {
                const TrialRecord rec = run_trial_impl(config, snr, i, cb, decoder);
                be += static_cast<std::uint64_t>(rec.bit_errors);
                fe += rec.frame_error ? 1 : 0;
            }
            bit_err[w] = be;
            frame_err[w] = fe;
        };

        if (workers <= 1) {
            worker_body(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker_body, w);
            for (auto& th : pool) th.join();
        }

        std::uint64_t be = 0, fe = 0;
        for (unsigned w = 0; w < workers; ++w) {
            be += bit_err[w];
            fe += frame_err[w];
        }

        const std::uint64_t bits_total =
            config.trials * static_cast<std::uint64_t>(config.fragment_bits);
        SweepRow row;
        row.scheme = config.scheme.name();
        row.fading = fading_name(config.fading);
        row.snr_db = snr;
        row.trials = config.trials;
        row.bit_errors = be;
        row.ber = static_cast<double>(be) / static_cast<double>(bits_total);
        row.frame_errors = fe;
        row.fer = static_cast<double>(fe) / static_cast<double>(config.trials);
        std::tie(row.ber_ci_low, row.ber_ci_high) = wilson_interval(be, bits_total);
        row.seed = config.master_seed;

        std::fprintf(stderr, "stsc: %s/%s snr=%g dB: %llu trials, %llu bit errors\n",
                     row.scheme.c_str(), row.fading.c_str(), snr,
                     static_cast<unsigned long long>(config.trials),
                     static_cast<unsigned long long>(be));
        result.rows.push_back(std::move(row));
    }
    return result;
}

double bits_per_channel_use(Scheme s) {
    switch (s.kind) {
        case SchemeKind::Ssm: return 8.0;
        case SchemeKind::Dsm: return 4.0;
        case SchemeKind::MacGolden: return 4.0;
    }
    throw std::logic_error("bits_per_channel_use: bad scheme");
}

double measure_mean_energy(Scheme s, std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("measure_mean_energy: trials must be >= 1");
    const Codebook& cb = builtin_codebook(s);
    const double per_use_per_helper =
        static_cast<double>(s.rows_total()) * static_cast<double>(s.channel_uses());
    double acc = 0.0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        Rng rng(seed_absorb(seed_absorb(seed, s.id()), i));
        const Bits b1 = draw_bits(rng, 4);
        const Bits b2 = draw_bits(rng, 4);
        acc += fro_norm2(cb.at(b1, b2).matrix) / per_use_per_helper;
    }
    return acc / static_cast<double>(trials);
}

namespace {

std::string fmt10(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

std::string sweep_csv_header() {
    return "scheme,fading,snr_db,trials,bit_errors,ber,frame_errors,fer,ber_ci_low,ber_ci_high,seed";
}

std::string sweep_csv(const SweepResult& result) {
    std::string out = sweep_csv_header() + "\n";
    for (const auto& r : result.rows) {
        out += r.scheme + "," + r.fading + "," + fmt10(r.snr_db) + "," + std::to_string(r.trials) +
               "," + std::to_string(r.bit_errors) + "," + fmt10(r.ber) + "," +
               std::to_string(r.frame_errors) + "," + fmt10(r.fer) + "," + fmt10(r.ber_ci_low) +
               "," + fmt10(r.ber_ci_high) + "," + std::to_string(r.seed) + "\n";
    }
    return out;
}

}  // namespace stsc
