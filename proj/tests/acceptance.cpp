// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "stsc/cnvd.hpp"
#include "stsc/coset.hpp"
#include "stsc/modulation.hpp"
#include "stsc/sim.hpp"

using namespace stsc;

namespace {

int g_failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
    std::printf("criterion %2d: %s  %s%s%s\n", id, pass ? "PASS" : "FAIL", what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

const std::vector<Scheme> kSweepSchemes{Scheme{SchemeKind::Ssm}, Scheme{SchemeKind::Dsm},
                                        Scheme{SchemeKind::MacGolden, true}};
const std::vector<Scheme> kAllSchemes{Scheme{SchemeKind::Ssm}, Scheme{SchemeKind::Dsm},
                                      Scheme{SchemeKind::MacGolden, true},
                                      Scheme{SchemeKind::MacGolden, false}};

// ---- criterion 1: noiseless correctness ---------------------------------

void criterion_noiseless() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    for (const Scheme& s : kAllSchemes) {
        for (FadingModel fading : {FadingModel::Slow, FadingModel::Fast}) {
            SimConfig cfg;
            cfg.scheme = s;
            cfg.fading = fading;
            cfg.snr_db = {0.0};
            cfg.trials = 10000;
            cfg.master_seed = 42;
            cfg.noiseless = true;
            const SweepResult res = run_sweep(cfg);
            if (res.rows[0].bit_errors != 0) {
                pass = false;
                detail = s.name() + "/" + fading_name(fading) + " had bit errors";
            }
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 30.0 && pass) {
        pass = false;
        detail = "runtime " + fmt(dt) + " s exceeds 30 s";
    }
    report(1, pass, "noiseless repair: 0 bit errors in 10^4 trials per scheme and fading",
           detail.empty() ? fmt(dt) + " s" : detail);
}

// ---- criteria 2 and 4: qualitative ordering and monotonicity ------------

struct SweepSet {
    std::vector<SweepResult> per_scheme;
    double wall_s = 0.0;
};

SweepSet heavy_sweeps() {
    const auto t0 = std::chrono::steady_clock::now();
    SweepSet set;
    for (const Scheme& s : kSweepSchemes) {
        SimConfig cfg;
        cfg.scheme = s;
        cfg.fading = FadingModel::Slow;
        cfg.snr_db = {0, 5, 10, 15, 20, 25, 30};
        cfg.trials = 100000;
        cfg.master_seed = 42;
        set.per_scheme.push_back(run_sweep(cfg));
    }
    set.wall_s = seconds_since(t0);
    return set;
}

const SweepRow& row_at(const SweepResult& res, double snr) {
    for (const auto& row : res.rows)
        if (row.snr_db == snr) return row;
    throw std::logic_error("missing sweep row");
}

void criterion_ordering(const SweepSet& set) {
    const SweepRow& ssm = row_at(set.per_scheme[0], 20.0);
    const SweepRow& dsm = row_at(set.per_scheme[1], 20.0);
    const SweepRow& mac = row_at(set.per_scheme[2], 20.0);

    const bool mac_below = mac.ber < ssm.ber && mac.ber_ci_high < ssm.ber_ci_low;
    const bool dsm_below = dsm.ber < ssm.ber && dsm.ber_ci_high < ssm.ber_ci_low;
    bool pass = mac_below && dsm_below;
    std::string detail = "20 dB BER: ssm=" + fmt(ssm.ber) + " dsm=" + fmt(dsm.ber) +
                         " mac-golden=" + fmt(mac.ber) + " (" + fmt(set.wall_s) + " s)";
    if (set.wall_s >= 600.0) {
        pass = false;
        detail += " runtime exceeds 10 min";
    }
    report(2, pass, "slow fading at 20 dB: DSM and MAC code beat SSM with disjoint 95% CIs",
           detail);
}

void criterion_monotonic(const SweepSet& set) {
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < kSweepSchemes.size(); ++i) {
        const auto& rows = set.per_scheme[i].rows;
        for (std::size_t p = 0; p + 1 < rows.size(); ++p) {
            if (rows[p].bit_errors >= 100 && rows[p + 1].bit_errors >= 100 &&
                rows[p + 1].ber > rows[p].ber) {
                pass = false;
                detail = kSweepSchemes[i].name() + " rises between " + fmt(rows[p].snr_db) +
                         " and " + fmt(rows[p + 1].snr_db) + " dB";
            }
        }
    }
    report(4, pass, "BER non-increasing over 0..30 dB wherever both points have >= 100 errors",
           detail);
}

// ---- criterion 3: SSM slow/fast equivalence ------------------------------

void criterion_ssm_equivalence() {
    SimConfig slow;
    slow.scheme = Scheme{SchemeKind::Ssm};
    slow.fading = FadingModel::Slow;
    slow.snr_db = {15.0};
    slow.trials = 10000;
    slow.master_seed = 42;
    SimConfig fast = slow;
    fast.fading = FadingModel::Fast;

    bool pass = true;
    std::string detail;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        if (!(run_trial(slow, 15.0, i) == run_trial(fast, 15.0, i))) {
            pass = false;
            detail = "trial " + std::to_string(i) + " differs";
            break;
        }
    }
    report(3, pass, "SSM TrialRecords bit-identical under slow and fast fading (10^4 trials)",
           detail);
}

// ---- criterion 5: CNVD verification --------------------------------------

void criterion_cnvd() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;

    const Codebook cb = enumerate_codebook({SchemeKind::MacGolden, false});
    const double unscale = 1.0 / cb.normalization;

    double exact_min = 0.0;
    double numeric_min = 0.0;
    bool found = false;
    for (const auto& cw : cb.codewords) {
        const GMat& e = *cw.exact_form;
        const GoldenElem det = e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
        const CMat raw = unscale * cw.matrix;
        const double numeric =
            std::abs(raw(0, 0) * raw(1, 1) - raw(0, 1) * raw(1, 0));

        if (det.is_zero()) {
            if (numeric > 1e-9) {
                pass = false;
                detail = "numeric determinant nonzero where the exact one vanishes";
            }
            continue;
        }
        // Center-argument consequence: det / sqrt5 is a Gaussian integer.
        if (!divisible_by_sqrt5(det) || !div_sqrt5(det).b.is_zero()) {
            pass = false;
            detail = "nonzero determinant not in sqrt5 * Z[i]";
            continue;
        }
        const double exact_abs = std::sqrt(embed_abs2(det).value());
        if (!found || exact_abs < exact_min) {
            exact_min = exact_abs;
            numeric_min = numeric;
            found = true;
        }
    }
    if (!found || exact_min <= 0.0) {
        pass = false;
        detail = "no nonzero determinant found";
    } else if (std::abs(exact_min - numeric_min) > 1e-9) {
        pass = false;
        detail = "exact and numeric kappa disagree";
    }

    // The library report agrees with the direct scan.
    const CnvdReport report_cw = cnvd_check(cb, CnvdMode::OverCodewords);
    if (std::abs(report_cw.per_j[1].min_nonzero_absdet - exact_min) > 1e-9) {
        pass = false;
        detail = "cnvd_check kappa differs from the direct scan";
    }

    const double dt = seconds_since(t0);
    if (dt >= 5.0 && pass) {
        pass = false;
        detail = "runtime " + fmt(dt) + " s exceeds 5 s";
    }
    report(5, pass,
           "untwisted MAC code: dets exactly zero or >= kappa, exact/numeric kappa agree",
           pass ? "kappa=" + fmt(exact_min) + " (" + fmt(dt) + " s)" : detail);
}

// ---- criterion 6: decoder oracle equivalence ------------------------------

std::size_t naive_scan(const CMat& y, const ChannelRealization& realization, const Codebook& cb) {
    std::size_t best = 0;
    double best_metric = 0.0;
    for (std::size_t i = 0; i < cb.codewords.size(); ++i) {
        const CMat& x = cb.codewords[i].matrix;
        double metric = 0.0;
        for (std::size_t t = 0; t < x.cols; ++t)
            for (std::size_t r = 0; r < y.rows; ++r) {
                std::complex<double> pred = 0.0;
                for (std::size_t j = 0; j < x.rows; ++j) pred += realization.h(t)(r, j) * x(j, t);
                metric += std::norm(y(r, t) - pred);
            }
        if (i == 0 || metric < best_metric) {
            best_metric = metric;
            best = i;
        }
    }
    return best;
}

void criterion_decoder_oracle() {
    bool pass = true;
    std::string detail;
    for (const Scheme& s : kAllSchemes) {
        const Codebook& cb = builtin_codebook(s);
        MlDecoder dec(cb);
        Rng rng(31337 + s.id());
        for (int i = 0; i < 1000 && pass; ++i) {
            auto realization = draw_channel(2, s.rows_total(), s.channel_uses(),
                                            (i % 2) ? FadingModel::Fast : FadingModel::Slow, rng);
            realization.noise_std = noise_std_from_snr(11.0, s.helpers());
            const std::size_t pick = static_cast<std::size_t>(rng.next_u64() % cb.size());
            const auto rx = transmit(cb.codewords[pick].matrix, realization, rng);
            if (dec.decode(rx.y, realization).index != naive_scan(rx.y, realization, cb)) {
                pass = false;
                detail = s.name() + " instance " + std::to_string(i);
            }
        }
    }
    report(6, pass, "ml_decode equals the naive full-scan argmin on 10^3 noisy instances/scheme",
           detail);
}

// ---- criterion 7: lift bijectivity ---------------------------------------

void criterion_lifts() {
    bool pass = true;
    std::string detail;
    for (std::uint32_t v = 0; v < 4 && pass; ++v) {
        const Bits b = bits_from_uint(v, 2);
        if (demap(Constellation::qam4(), gray4(b)) != b) {
            pass = false;
            detail = "gray4 at " + bits_to_string(b);
        }
    }
    for (std::uint32_t v = 0; v < 16 && pass; ++v) {
        const Bits b = bits_from_uint(v, 4);
        if (demap(Constellation::qam16(), gray16(b)) != b) {
            pass = false;
            detail = "gray16 at " + bits_to_string(b);
        } else if (delift_golden(lift_golden(b)) != b) {
            pass = false;
            detail = "golden lift at " + bits_to_string(b);
        }
    }
    for (int t = 1; t <= 4 && pass; ++t) {
        const std::uint32_t count = 1u << (2 * t);
        for (std::uint32_t v = 0; v < count; ++v) {
            const Bits b = bits_from_uint(v, static_cast<std::size_t>(2 * t));
            if (coset_decode(coset_encode(b)) != b) {
                pass = false;
                detail = "coset at t=" + std::to_string(t) + " " + bits_to_string(b);
                break;
            }
        }
    }
    report(7, pass, "gray4/gray16/golden lifts and coset lift (t=1..4) round-trip exhaustively",
           detail);
}

// ---- criterion 8: rate accounting -----------------------------------------

void criterion_rates() {
    const bool pass = bits_per_channel_use(Scheme{SchemeKind::Ssm}) == 8.0 &&
                      bits_per_channel_use(Scheme{SchemeKind::Dsm}) == 4.0 &&
                      bits_per_channel_use(Scheme{SchemeKind::MacGolden, true}) == 4.0;
    report(8, pass, "bits per channel use: SSM 8, DSM 4, MAC golden 4", "");
}

// ---- criterion 9: reproducibility under parallelism -----------------------

void criterion_workers() {
    std::vector<std::string> csvs;
    for (const char* workers : {"1", "4", "16"}) {
        setenv("STSC_WORKERS", workers, 1);
        SweepResult all;
        for (const Scheme& s : kSweepSchemes) {
            SimConfig cfg;
            cfg.scheme = s;
            cfg.snr_db = {0.0, 15.0, 30.0};
            cfg.trials = 2000;
            cfg.master_seed = 42;
            const SweepResult part = run_sweep(cfg);
            all.rows.insert(all.rows.end(), part.rows.begin(), part.rows.end());
        }
        csvs.push_back(sweep_csv(all));
    }
    unsetenv("STSC_WORKERS");
    const bool pass = csvs[0] == csvs[1] && csvs[0] == csvs[2];
    report(9, pass, "byte-identical CSV with STSC_WORKERS in {1, 4, 16}", "");
}

// ---- criterion 10: energy normalization -----------------------------------

void criterion_energy() {
    bool pass = true;
    std::string detail;
    for (const Scheme& s : kAllSchemes) {
        const double mean = measure_mean_energy(s, 10000, 2024);
        detail += s.name() + "=" + fmt(mean) + " ";
        if (std::abs(mean - 1.0) > 0.01) pass = false;
    }
    report(10, pass, "mean transmit energy per channel use per helper = 1 +- 1% (10^4 trials)",
           detail);
}

}  // namespace

int main() {
    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    criterion_noiseless();
    const SweepSet sweeps = heavy_sweeps();
    criterion_ordering(sweeps);
    criterion_ssm_equivalence();
    criterion_monotonic(sweeps);
    criterion_cnvd();
    criterion_decoder_oracle();
    criterion_lifts();
    criterion_rates();
    criterion_workers();
    criterion_energy();

    if (g_failures != 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
