// SPDX-License-Identifier: Apache-2.0
//
// coexsim - link-level simulator for beamforming-based unlicensed-band coexistence

#include "coexsim/channel.hpp"

#include <cmath>

#include "coexsim/errors.hpp"

namespace coexsim {

namespace {
constexpr std::uint64_t kChannelSalt = 0x6368616e6e656cULL;  // "channel"

cplx faded_gain(double gain, Rng& rng) {
    return std::sqrt(gain) * draw_small_scale(rng);
}
} // namespace

double distance(const NodePosition& a, const NodePosition& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

double path_gain(const PathLossModel& model, double d) {
    if (!(d > 0.0)) {
        throw InvalidGeometry("path_gain: distance must be positive");
    }
    const double dd = std::max(d, model.reference_distance);
    const double loss_db = model.reference_loss_db +
                           10.0 * model.exponent *
                               std::log10(dd / model.reference_distance);
    return std::pow(10.0, -loss_db / 10.0);
}

cplx draw_small_scale(Rng& rng) { return rng.cgaussian_unit(); }

ChannelRealization realize_slot(const ScenarioGeometry& geometry,
                                const PathLossModel& model,
                                std::uint64_t slot, std::uint64_t seed) {
    Rng rng(substream_seed(seed, slot, kChannelSalt));
    const std::size_t nt = geometry.antenna_count;
    const std::size_t ns = geometry.secondary_receivers.size();
    const std::size_t nk = geometry.primary_nodes.size();

    ChannelRealization r;
    r.slot = slot;

    // Fixed draw order: h rows, g rows, q_cross, q_prim. Keeping the order
    // independent of schemes and schedules preserves stream alignment.
    r.h.resize(ns);
    for (std::size_t s = 0; s < ns; ++s) {
        const double gain =
            path_gain(model, distance(geometry.secondary_tx,
                                      geometry.secondary_receivers[s]));
        r.h[s].resize(nt);
        for (std::size_t n = 0; n < nt; ++n) r.h[s][n] = faded_gain(gain, rng);
    }

    r.g.resize(nk);
    for (std::size_t k = 0; k < nk; ++k) {
        const double gain =
            path_gain(model, distance(geometry.secondary_tx,
                                      geometry.primary_nodes[k].position));
        r.g[k].resize(nt);
        for (std::size_t n = 0; n < nt; ++n) r.g[k][n] = faded_gain(gain, rng);
    }

    r.q_cross.assign(nk, std::vector<cplx>(ns));
    for (std::size_t k = 0; k < nk; ++k) {
        for (std::size_t s = 0; s < ns; ++s) {
            const double gain =
                path_gain(model, distance(geometry.primary_nodes[k].position,
                                          geometry.secondary_receivers[s]));
            r.q_cross[k][s] = faded_gain(gain, rng);
        }
    }

    r.q_prim.assign(nk, std::vector<cplx>(nk));
    for (std::size_t k = 0; k < nk; ++k) {
        for (std::size_t j = 0; j < nk; ++j) {
            if (k == j) continue;
            const double gain =
                path_gain(model, distance(geometry.primary_nodes[k].position,
                                          geometry.primary_nodes[j].position));
            r.q_prim[k][j] = faded_gain(gain, rng);
        }
    }
    return r;
}

} // namespace coexsim
