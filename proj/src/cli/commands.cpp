#include "cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "stsc/cnvd.hpp"
#include "stsc/coset.hpp"
#include "stsc/modulation.hpp"
#include "stsc/version.hpp"

namespace stsc::cli {

int cmd_sweep(const SweepSpec& spec) {
    spec.validate();
    const auto t0 = std::chrono::steady_clock::now();

    SweepResult all;
    for (const Scheme& scheme : spec.schemes) {
        SweepResult part = run_sweep(spec.sim_config(scheme));
        all.rows.insert(all.rows.end(), part.rows.begin(), part.rows.end());
    }
    const std::string csv = sweep_csv(all);

    {
        std::ofstream out(spec.out);
        if (!out) throw std::runtime_error("sweep: cannot write " + spec.out);
        out << csv;
        if (!out) throw std::runtime_error("sweep: write failed for " + spec.out);
    }

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    nlohmann::ordered_json sidecar;
    sidecar["tool"] = "stsc";
    sidecar["version"] = kVersion;
    sidecar["command"] = "sweep";
    sidecar["config"] = nlohmann::ordered_json::parse(spec.to_json());
    sidecar["rows"] = all.rows.size();
    sidecar["wall_time_s"] = wall;
    const std::string sidecar_path = spec.out + ".meta.json";
    {
        std::ofstream out(sidecar_path);
        if (!out) throw std::runtime_error("sweep: cannot write " + sidecar_path);
        out << sidecar.dump(2) << "\n";
        if (!out) throw std::runtime_error("sweep: write failed for " + sidecar_path);
    }

    std::cout << "wrote " << all.rows.size() << " rows to " << spec.out << " (sidecar "
              << sidecar_path << ")\n";
    return 0;
}

int cmd_cnvd(const std::string& scheme_name, const std::string& mode_name) {
    Scheme scheme;
    if (scheme_name == "mac-golden-twist" || scheme_name == "mac-golden")
        scheme = {SchemeKind::MacGolden, true};
    else if (scheme_name == "mac-golden-notwist")
        scheme = {SchemeKind::MacGolden, false};
    else
        throw std::invalid_argument("cnvd: unknown scheme '" + scheme_name +
                                    "' (expected mac-golden-twist or mac-golden-notwist)");

    const CnvdMode mode = cnvd_mode_parse(mode_name);
    const CnvdReport report = cnvd_check(builtin_codebook(scheme), mode);
    std::cout << cnvd_to_json(report) << "\n";

    for (const auto& row : report.per_j)
        if (!row.has_nonzero) return 2;
    return 0;
}

int cmd_lift_check(int t_max) {
    if (t_max < 1 || t_max > 8) throw std::invalid_argument("lift-check: t_max must be in [1, 8]");

    const auto fail = [](const std::string& what) {
        std::cout << "FAIL: " << what << "\n";
        return 2;
    };

    for (std::uint32_t v = 0; v < 4; ++v) {
        const Bits b = bits_from_uint(v, 2);
        if (demap(Constellation::qam4(), gray4(b)) != b)
            return fail("gray4 round-trip at " + bits_to_string(b));
    }
    std::cout << "ok: gray4 round-trip (4 strings)\n";

    for (std::uint32_t v = 0; v < 16; ++v) {
        const Bits b = bits_from_uint(v, 4);
        if (demap(Constellation::qam16(), gray16(b)) != b)
            return fail("gray16 round-trip at " + bits_to_string(b));
        if (delift_golden(lift_golden(b)) != b)
            return fail("golden lift round-trip at " + bits_to_string(b));
    }
    std::cout << "ok: gray16 round-trip (16 strings)\n";
    std::cout << "ok: golden lift round-trip (16 strings)\n";

    for (int t = 1; t <= t_max; ++t) {
        const std::uint64_t count = std::uint64_t{1} << (2 * t);
        std::vector<bool> seen(count, false);
        for (std::uint64_t v = 0; v < count; ++v) {
            const Bits b = bits_from_uint(static_cast<std::uint32_t>(v),
                                          static_cast<std::size_t>(2 * t));
            const CosetLabel label = coset_encode(b);
            if (coset_decode(label) != b)
                return fail("coset round-trip at t=" + std::to_string(t) + " bits " +
                            bits_to_string(b));
            const std::uint64_t idx = static_cast<std::uint64_t>(label.rep.re) << t |
                                      static_cast<std::uint64_t>(label.rep.im);
            if (seen[idx])
                return fail("coset collision at t=" + std::to_string(t) + " bits " +
                            bits_to_string(b));
            seen[idx] = true;
        }
        std::cout << "ok: coset lift bijective at t=" << t << " (" << count << " labels)\n";
    }
    return 0;
}

namespace {

// Straightforward full-scan reference used to cross-check the decoder; kept
// free of the kernel path on purpose.
std::size_t naive_argmin(const CMat& y, const ChannelRealization& realization,
                         const Codebook& cb) {
    std::size_t best = 0;
    double best_metric = 0.0;
    for (std::size_t i = 0; i < cb.codewords.size(); ++i) {
        const CMat& x = cb.codewords[i].matrix;
        double metric = 0.0;
        for (std::size_t t = 0; t < x.cols; ++t) {
            const CMat& h = realization.h(t);
            for (std::size_t r = 0; r < y.rows; ++r) {
                std::complex<double> pred = 0.0;
                for (std::size_t j = 0; j < x.rows; ++j) pred += h(r, j) * x(j, t);
                metric += std::norm(y(r, t) - pred);
            }
        }
        if (i == 0 || metric < best_metric) {
            best_metric = metric;
            best = i;
        }
    }
    return best;
}

}  // namespace

int cmd_selftest() {
    const auto fail = [](const std::string& what) {
        std::cout << "FAIL: " << what << "\n";
        return 2;
    };
    const std::vector<Scheme> schemes{Scheme{SchemeKind::Ssm}, Scheme{SchemeKind::Dsm},
                                      Scheme{SchemeKind::MacGolden, true},
                                      Scheme{SchemeKind::MacGolden, false}};

    // Ring sanity: norm of the shaping element and an embedding sample.
    if (relative_norm(golden_alpha()) != GaussInt{2, 1}) return fail("norm check: relative_norm(alpha) != 2+i");
    {
        const GoldenElem x{GaussInt{3, -2}, GaussInt{-1, 4}};
        const GoldenElem y{GaussInt{-2, 5}, GaussInt{2, 1}};
        if (tau(tau(x)) != x) return fail("norm check: tau not an involution");
        if (relative_norm(x * y) != relative_norm(x) * relative_norm(y))
            return fail("norm check: relative norm not multiplicative");
        if (std::abs(embed(x * y) - embed(x) * embed(y)) > 1e-9)
            return fail("norm check: embedding not multiplicative");
    }
    std::cout << "ok: golden ring norm and embedding checks\n";

    // Noiseless end-to-end repair is exact.
    for (const Scheme& s : schemes) {
        for (FadingModel fading : {FadingModel::Slow, FadingModel::Fast}) {
            SimConfig cfg;
            cfg.scheme = s;
            cfg.fading = fading;
            cfg.snr_db = {0.0};
            cfg.trials = 200;
            cfg.master_seed = 7;
            cfg.noiseless = true;
            for (std::uint64_t i = 0; i < cfg.trials; ++i) {
                const TrialRecord rec = run_trial(cfg, 0.0, i);
                if (rec.bit_errors != 0)
                    return fail("noiseless repair: " + s.name() + "/" + fading_name(fading) +
                                " trial " + std::to_string(i));
            }
        }
    }
    std::cout << "ok: noiseless end-to-end repair (200 trials per scheme and fading)\n";

    // Decoder against the naive scan.
    for (const Scheme& s : schemes) {
        const Codebook& cb = builtin_codebook(s);
        MlDecoder decoder(cb);
        Rng rng(0xC0FFEEULL + s.id());
        for (int i = 0; i < 100; ++i) {
            ChannelRealization realization =
                draw_channel(2, s.rows_total(), s.channel_uses(), FadingModel::Slow, rng);
            realization.noise_std = noise_std_from_snr(12.0, s.helpers());
            const std::size_t pick = static_cast<std::size_t>(rng.next_u64() % cb.size());
            const ReceivedBlock rx = transmit(cb.codewords[pick].matrix, realization, rng);
            const DecodeResult got = decoder.decode(rx.y, realization);
            if (got.index != naive_argmin(rx.y, realization, cb))
                return fail("decoder oracle: " + s.name() + " instance " + std::to_string(i));
        }
    }
    std::cout << "ok: decoder matches naive full scan (100 noisy instances per scheme)\n";

    // Energy accounting.
    for (const Scheme& s : schemes) {
        const double mean = measure_mean_energy(s, 10000, 2024);
        if (std::abs(mean - 1.0) > 0.01)
            return fail("energy accounting: " + s.name() + " mean " + std::to_string(mean));
    }
    std::cout << "ok: unit energy per channel use per helper (10000 trials per scheme)\n";

    std::cout << "selftest passed\n";
    return 0;
}

int cmd_plot(const std::vector<std::string>& csv_paths, const PlotOptions& options) {
    render_ber_svg(csv_paths, options);
    std::cout << "wrote " << options.out << "\n";
    return 0;
}

}  // namespace stsc::cli
