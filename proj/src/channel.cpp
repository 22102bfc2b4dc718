#include "stsc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace stsc {

std::string fading_name(FadingModel m) { return m == FadingModel::Slow ? "slow" : "fast"; }

FadingModel fading_parse(std::string_view s) {
    if (s == "slow") return FadingModel::Slow;
    if (s == "fast") return FadingModel::Fast;
    throw std::invalid_argument("unknown fading model: " + std::string(s));
}

ChannelRealization draw_channel(int n_r, int n_t_total, int T, FadingModel model, Rng& rng) {
    if (n_r < 1 || n_t_total < 1 || T < 1)
        throw std::invalid_argument("draw_channel: dimensions must be positive");

    const auto draw_matrix = [&] {
        CMat h(static_cast<std::size_t>(n_r), static_cast<std::size_t>(n_t_total));
        for (auto& z : h.data) z = rng.next_cgauss();
        return h;
    };

    ChannelRealization r;
    r.h_per_use.reserve(static_cast<std::size_t>(T));
    if (model == FadingModel::Slow) {
        const CMat h = draw_matrix();
        for (int t = 0; t < T; ++t) r.h_per_use.push_back(h);
    } else {
        for (int t = 0; t < T; ++t) r.h_per_use.push_back(draw_matrix());
    }
    return r;
}

double noise_std_from_snr(double snr_db, int k_helpers) {
    if (k_helpers < 1) throw std::invalid_argument("noise_std_from_snr: k_helpers must be >= 1");
    const double variance = static_cast<double>(k_helpers) / std::pow(10.0, snr_db / 10.0);
    return std::sqrt(variance);
}

ReceivedBlock transmit(const CMat& x, const ChannelRealization& realization, Rng& rng) {
    if (realization.h_per_use.empty()) throw std::invalid_argument("transmit: empty realization");
    const std::size_t t_uses = realization.uses();
    const std::size_t n_r = realization.h(0).rows;
    if (x.cols != t_uses || realization.h(0).cols != x.rows)
        throw std::invalid_argument("transmit: shape mismatch between codeword and channel");

    ReceivedBlock out;
    out.y = CMat(n_r, t_uses);
    for (std::size_t t = 0; t < t_uses; ++t) {
        const CMat& h = realization.h(t);
        if (h.rows != n_r || h.cols != x.rows) throw std::invalid_argument("transmit: ragged realization");
        for (std::size_t r = 0; r < n_r; ++r) {
            std::complex<double> acc = 0.0;
            for (std::size_t j = 0; j < x.rows; ++j) acc += h(r, j) * x(j, t);
            out.y(r, t) = acc + realization.noise_std * rng.next_cgauss();
        }
    }
    return out;
}

}  // namespace stsc
