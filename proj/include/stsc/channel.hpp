#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stsc/matrix.hpp"
#include "stsc/rng.hpp"

namespace stsc {

// Slow fading draws one channel matrix reused for all channel uses; fast
// fading draws an independent matrix per use.
enum class FadingModel { Slow, Fast };

std::string fading_name(FadingModel m);
FadingModel fading_parse(std::string_view s);

struct ChannelRealization {
    std::vector<CMat> h_per_use;  // T matrices, n_r x n_t_total; identical under Slow
    double noise_std = 0.0;       // sigma with E|w|^2 = sigma^2 per complex entry

    const CMat& h(std::size_t t) const { return h_per_use[t]; }
    std::size_t uses() const { return h_per_use.size(); }
};

struct ReceivedBlock {
    CMat y;  // n_r x T
};

// Entries i.i.d. CN(0,1) from the supplied generator; noise_std is left at 0
// for the caller to set.
ChannelRealization draw_channel(int n_r, int n_t_total, int T, FadingModel model, Rng& rng);

// With unit average transmit energy per channel use per helper, the total
// received signal power per antenna is K, so sigma^2 = K / 10^(snr_db/10).
double noise_std_from_snr(double snr_db, int k_helpers = 2);

// Y[:,t] = H_t X[:,t] + w_t, noise i.i.d. CN(0, noise_std^2). Noise is drawn
// column-major (t outer, receive antenna inner).
ReceivedBlock transmit(const CMat& x, const ChannelRealization& realization, Rng& rng);

}  // namespace stsc
