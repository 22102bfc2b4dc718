#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "stsc/sim.hpp"

using namespace stsc;

namespace {

SimConfig base_config(Scheme s, FadingModel fading = FadingModel::Slow) {
    SimConfig cfg;
    cfg.scheme = s;
    cfg.fading = fading;
    cfg.snr_db = {10.0};
    cfg.trials = 100;
    cfg.master_seed = 42;
    return cfg;
}

struct WorkerEnvGuard {
    explicit WorkerEnvGuard(const char* value) {
        if (value)
            setenv("STSC_WORKERS", value, 1);
        else
            unsetenv("STSC_WORKERS");
    }
    ~WorkerEnvGuard() { unsetenv("STSC_WORKERS"); }
};

}  // namespace

TEST_CASE("config validation") {
    SimConfig cfg = base_config(Scheme{SchemeKind::Ssm});
    cfg.trials = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = base_config(Scheme{SchemeKind::Ssm});
    cfg.fragment_bits = 8;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = base_config(Scheme{SchemeKind::Ssm});
    cfg.snr_db.clear();
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("run_trial is bit-identical on replay") {
    for (Scheme s : {Scheme{SchemeKind::Ssm}, Scheme{SchemeKind::Dsm},
                     Scheme{SchemeKind::MacGolden, true}}) {
        const SimConfig cfg = base_config(s);
        for (std::uint64_t i : {std::uint64_t{0}, std::uint64_t{17}, std::uint64_t{9999}}) {
            const TrialRecord a = run_trial(cfg, 10.0, i);
            const TrialRecord b = run_trial(cfg, 10.0, i);
            CHECK(a == b);
        }
    }
}

TEST_CASE("trial records change with the trial index and the seed") {
    const SimConfig cfg = base_config(Scheme{SchemeKind::Dsm});
    const TrialRecord a = run_trial(cfg, 10.0, 1);
    const TrialRecord b = run_trial(cfg, 10.0, 2);
    CHECK(a.b1 != b.b1);  // overwhelmingly likely under distinct streams
    SimConfig other = cfg;
    other.master_seed = 43;
    const TrialRecord c = run_trial(other, 10.0, 1);
    CHECK((a.b1 != c.b1 || a.b2 != c.b2 || a.repaired != c.repaired));
}

TEST_CASE("trial seeding is independent of the configured trial count") {
    SimConfig small = base_config(Scheme{SchemeKind::MacGolden, true});
    small.trials = 50;
    SimConfig big = small;
    big.trials = 100;
    for (std::uint64_t i = 0; i < 50; ++i)
        CHECK(run_trial(small, 10.0, i) == run_trial(big, 10.0, i));
}

TEST_CASE("noiseless trials never err") {
    for (Scheme s : {Scheme{SchemeKind::Ssm}, Scheme{SchemeKind::Dsm},
                     Scheme{SchemeKind::MacGolden, true}, Scheme{SchemeKind::MacGolden, false}}) {
        for (FadingModel fading : {FadingModel::Slow, FadingModel::Fast}) {
            SimConfig cfg = base_config(s, fading);
            cfg.noiseless = true;
            cfg.trials = 200;
            for (std::uint64_t i = 0; i < cfg.trials; ++i) {
                const TrialRecord rec = run_trial(cfg, 0.0, i);
                CHECK(rec.bit_errors == 0);
                CHECK_FALSE(rec.frame_error);
                CHECK(rec.repaired == xor_bits(rec.b1, rec.b2));
            }
        }
    }
}

TEST_CASE("SSM records are bit-identical under slow and fast fading") {
    const SimConfig slow = base_config(Scheme{SchemeKind::Ssm}, FadingModel::Slow);
    const SimConfig fast = base_config(Scheme{SchemeKind::Ssm}, FadingModel::Fast);
    for (std::uint64_t i = 0; i < 500; ++i)
        CHECK(run_trial(slow, 10.0, i) == run_trial(fast, 10.0, i));
}

TEST_CASE("trial bit accounting matches the storage XOR rule") {
    const SimConfig cfg = base_config(Scheme{SchemeKind::Ssm});
    for (std::uint64_t i = 0; i < 200; ++i) {
        const TrialRecord rec = run_trial(cfg, 3.0, i);
        CHECK(rec.repaired == xor_bits(rec.b1_hat, rec.b2_hat));
        CHECK(rec.bit_errors ==
              static_cast<int>(hamming(rec.repaired, xor_bits(rec.b1, rec.b2))));
        CHECK(rec.frame_error == (rec.bit_errors > 0));
    }
}

TEST_CASE("run_sweep aggregates trials and brackets BER with Wilson intervals") {
    SimConfig cfg = base_config(Scheme{SchemeKind::Dsm});
    cfg.snr_db = {0.0, 10.0};
    cfg.trials = 400;
    const SweepResult res = run_sweep(cfg);
    REQUIRE(res.rows.size() == 2);
    for (const auto& row : res.rows) {
        CHECK(row.trials == 400);
        CHECK(row.ber ==
              doctest::Approx(static_cast<double>(row.bit_errors) / (400.0 * 4.0)));
        CHECK(row.ber_ci_low <= row.ber);
        CHECK(row.ber_ci_high >= row.ber);
        CHECK(row.seed == 42);
        CHECK(row.scheme == "dsm");
        CHECK(row.fading == "slow");
    }
    // Aggregation equals a direct per-trial tally.
    std::uint64_t bit_errors = 0;
    for (std::uint64_t i = 0; i < 400; ++i)
        bit_errors += static_cast<std::uint64_t>(run_trial(cfg, 0.0, i).bit_errors);
    CHECK(res.rows[0].bit_errors == bit_errors);
}

TEST_CASE("sweep output is independent of the worker count") {
    SimConfig cfg = base_config(Scheme{SchemeKind::MacGolden, true});
    cfg.snr_db = {0.0, 20.0};
    cfg.trials = 300;

    std::string csv1, csv3, csv16;
    {
        WorkerEnvGuard guard("1");
        csv1 = sweep_csv(run_sweep(cfg));
    }
    {
        WorkerEnvGuard guard("3");
        csv3 = sweep_csv(run_sweep(cfg));
    }
    {
        WorkerEnvGuard guard("16");
        csv16 = sweep_csv(run_sweep(cfg));
    }
    CHECK(csv1 == csv3);
    CHECK(csv1 == csv16);
}

TEST_CASE("invalid STSC_WORKERS is rejected") {
    WorkerEnvGuard guard("три");
    CHECK_THROWS_AS((void)resolve_workers(), std::invalid_argument);
}

TEST_CASE("wilson_interval basics") {
    const auto [lo0, hi0] = wilson_interval(0, 100);
    CHECK(lo0 == 0.0);
    CHECK(hi0 > 0.0);
    CHECK(hi0 < 0.05);
    const auto [lon, hin] = wilson_interval(100, 100);
    CHECK(hin == 1.0);
    CHECK(lon < 1.0);
    const auto [lo, hi] = wilson_interval(50, 100);
    CHECK(lo < 0.5);
    CHECK(hi > 0.5);
    CHECK(hi - 0.5 == doctest::Approx(0.5 - lo).epsilon(1e-12));
    // Width shrinks with n.
    const auto [lo2, hi2] = wilson_interval(500, 1000);
    CHECK(hi2 - lo2 < hi - lo);
    CHECK_THROWS_AS((void)wilson_interval(1, 0), std::invalid_argument);
}

TEST_CASE("bits_per_channel_use: 8 / 4 / 4") {
    CHECK(bits_per_channel_use(Scheme{SchemeKind::Ssm}) == 8.0);
    CHECK(bits_per_channel_use(Scheme{SchemeKind::Dsm}) == 4.0);
    CHECK(bits_per_channel_use(Scheme{SchemeKind::MacGolden, true}) == 4.0);
    CHECK(bits_per_channel_use(Scheme{SchemeKind::MacGolden, false}) == 4.0);
}

TEST_CASE("measured transmit energy sits at 1 per channel use per helper") {
    for (Scheme s : {Scheme{SchemeKind::Ssm}, Scheme{SchemeKind::Dsm},
                     Scheme{SchemeKind::MacGolden, true}, Scheme{SchemeKind::MacGolden, false}}) {
        const double mean = measure_mean_energy(s, 10000, 2024);
        CHECK(std::abs(mean - 1.0) < 0.01);
    }
}

TEST_CASE("CSV serialization: exact header and 10-digit floats") {
    CHECK(sweep_csv_header() ==
          "scheme,fading,snr_db,trials,bit_errors,ber,frame_errors,fer,ber_ci_low,ber_ci_high,seed");
    SweepResult res;
    SweepRow row;
    row.scheme = "dsm";
    row.fading = "slow";
    row.snr_db = 12.5;
    row.trials = 1000;
    row.bit_errors = 123;
    row.ber = 0.03075;
    row.frame_errors = 100;
    row.fer = 0.1;
    row.ber_ci_low = 0.025858474747474747;
    row.ber_ci_high = 0.03654321;
    row.seed = 42;
    res.rows.push_back(row);
    CHECK(sweep_csv(res) ==
          sweep_csv_header() +
              "\ndsm,slow,12.5,1000,123,0.03075,100,0.1,0.02585847475,0.03654321,42\n");
}
