// SPDX-License-Identifier: Apache-2.0
//
// coexsim - link-level simulator for beamforming-based unlicensed-band coexistence

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coexsim/numerics.hpp"
#include "coexsim/rng.hpp"

namespace coexsim {

struct NodePosition {
    double x = 0.0;
    double y = 0.0;
};

double distance(const NodePosition& a, const NodePosition& b);

/// Log-distance path loss: gain(d) = 10^-((L0 + 10 n log10(d/d0))/10).
/// Distances below d0 are clamped to d0. Defaults are indoor-office scale.
struct PathLossModel {
    double exponent = 3.0;
    double reference_loss_db = 40.0;
    double reference_distance = 1.0;
};

double path_gain(const PathLossModel& model, double d);

enum class PrimaryRole { Tx, Rx };

struct PrimaryNode {
    std::string name;
    NodePosition position;
    PrimaryRole role = PrimaryRole::Rx;
};

/// Node layout for one run. All antennas of the secondary transmitter
/// share one position (array aperture is negligible at link distances);
/// per-antenna fading is i.i.d.
struct ScenarioGeometry {
    std::size_t antenna_count = 4;
    NodePosition secondary_tx;
    std::vector<NodePosition> secondary_receivers;
    std::vector<PrimaryNode> primary_nodes;
};

/// Block-fading gains for one slot; fixed within the slot, redrawn
/// independently across slots.
struct ChannelRealization {
    std::uint64_t slot = 0;
    /// secondary tx antennas -> secondary receiver s (length N_t each)
    std::vector<CVector> h;
    /// secondary tx antennas -> primary node k (length N_t each)
    std::vector<CVector> g;
    /// q_cross[k][s]: primary node k -> secondary receiver s
    std::vector<std::vector<cplx>> q_cross;
    /// q_prim[k][j]: primary node k -> primary node j (diagonal unused)
    std::vector<std::vector<cplx>> q_prim;
};

/// Unit-variance circularly symmetric complex Gaussian small-scale fade.
cplx draw_small_scale(Rng& rng);

/// Pure function of (geometry, model, slot, seed): every coefficient is
/// sqrt(path_gain(d)) * draw_small_scale(), drawn in a fixed link order.
ChannelRealization realize_slot(const ScenarioGeometry& geometry,
                                const PathLossModel& model,
                                std::uint64_t slot, std::uint64_t seed);

} // namespace coexsim
