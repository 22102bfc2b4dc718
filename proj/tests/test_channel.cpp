#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stsc/channel.hpp"

using namespace stsc;

TEST_CASE("slow fading reuses one matrix, fast fading redraws") {
    Rng rng_slow(11);
    const auto slow = draw_channel(2, 2, 2, FadingModel::Slow, rng_slow);
    REQUIRE(slow.uses() == 2);
    CHECK(slow.h(0) == slow.h(1));

    Rng rng_fast(11);
    const auto fast = draw_channel(2, 2, 2, FadingModel::Fast, rng_fast);
    CHECK(fast.h(0) != fast.h(1));
    // Same seed: the fast draw's first matrix is the slow draw's matrix.
    CHECK(fast.h(0) == slow.h(0));
}

TEST_CASE("T=1 makes slow and fast draws identical under matched seeds") {
    Rng a(17), b(17);
    const auto slow = draw_channel(2, 2, 1, FadingModel::Slow, a);
    const auto fast = draw_channel(2, 2, 1, FadingModel::Fast, b);
    CHECK(slow.h_per_use == fast.h_per_use);
    // The generators stay in lockstep afterwards.
    CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("channel entries are unit-variance complex Gaussians") {
    Rng rng(23);
    double acc = 0.0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const auto h = draw_channel(1, 1, 1, FadingModel::Slow, rng);
        acc += std::norm(h.h(0)(0, 0));
    }
    const double mean = acc / draws;
    CHECK(mean > 0.99);
    CHECK(mean < 1.01);
}

TEST_CASE("noise_std_from_snr: two-helper convention") {
    CHECK(noise_std_from_snr(0.0, 2) * noise_std_from_snr(0.0, 2) == doctest::Approx(2.0));
    CHECK(noise_std_from_snr(10.0, 2) * noise_std_from_snr(10.0, 2) == doctest::Approx(0.2));
    CHECK(noise_std_from_snr(100.0, 2) < 1e-4);
    CHECK_THROWS_AS((void)noise_std_from_snr(0.0, 0), std::invalid_argument);
}

TEST_CASE("transmit: exact propagation at zero noise") {
    CMat x(2, 2);
    x(0, 0) = {1, 1};
    x(0, 1) = {-1, 2};
    x(1, 0) = {0, -3};
    x(1, 1) = {2, 0};

    ChannelRealization ident;
    CMat eye(2, 2);
    eye(0, 0) = eye(1, 1) = 1.0;
    ident.h_per_use = {eye, eye};
    ident.noise_std = 0.0;
    Rng rng(5);
    CHECK(transmit(x, ident, rng).y == x);

    Rng rng2(6);
    auto realization = draw_channel(2, 2, 2, FadingModel::Fast, rng2);
    realization.noise_std = 0.0;
    const auto y = transmit(x, realization, rng2).y;
    for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t r = 0; r < 2; ++r) {
            const auto expect =
                realization.h(t)(r, 0) * x(0, t) + realization.h(t)(r, 1) * x(1, t);
            CHECK(y(r, t) == expect);
        }
}

TEST_CASE("transmit: pure noise has the configured variance") {
    CMat x(1, 1);
    x(0, 0) = 0.0;
    ChannelRealization realization;
    CMat h(1, 1);
    h(0, 0) = 1.0;
    realization.h_per_use = {h};
    realization.noise_std = std::sqrt(0.5);

    Rng rng(31);
    double acc = 0.0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) acc += std::norm(transmit(x, realization, rng).y(0, 0));
    const double mean = acc / draws;
    CHECK(mean > 0.49);
    CHECK(mean < 0.51);
}

TEST_CASE("transmit is deterministic given the generator state") {
    CMat x(2, 1);
    x(0, 0) = {1, -1};
    x(1, 0) = {-1, 1};
    Rng ha(77);
    auto realization = draw_channel(2, 2, 1, FadingModel::Slow, ha);
    realization.noise_std = 1.0;
    Rng r1(123), r2(123);
    CHECK(transmit(x, realization, r1).y == transmit(x, realization, r2).y);
}

TEST_CASE("shape validation") {
    CMat x(2, 2);
    ChannelRealization realization;
    CMat h(2, 2);
    realization.h_per_use = {h};  // one use for a two-use codeword
    Rng rng(1);
    CHECK_THROWS_AS((void)transmit(x, realization, rng), std::invalid_argument);
    CHECK_THROWS_AS((void)draw_channel(0, 2, 1, FadingModel::Slow, rng), std::invalid_argument);
}
