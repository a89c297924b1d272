#pragma once

#include <cstdint>
#include <vector>

#include "cognet/access.hpp"
#include "cognet/geometry.hpp"
#include "cognet/rng.hpp"
#include "cognet/scenario.hpp"
#include "cognet/stats.hpp"

namespace cognet {

enum class Frame {
  primary_rx,  // Y_p at the origin, primary transmitter at (r_p, 0)
  typical_rx,  // typical receiver at the origin, its transmitter at (r_s, 0)
};

// One draw of the secondary network inside the disk of radius R around the
// frame origin, with every fade as an Exp(1) power.
struct NetworkRealization {
  Frame frame = Frame::primary_rx;
  PlacementPose pose;                 // primary pose; typical_rx frame only
  std::vector<Vec2> tx;               // secondary transmitters
  std::vector<double> orientation;    // transmitter boresights
  std::vector<double> fade_cross;     // G_i, toward Y_p; also the interference fade there
  std::vector<double> fade_typical;   // G''_i, toward the typical receiver
  std::vector<std::uint8_t> active;   // U_i
  double fade_primary = 1.0;          // H_p, primary serving link
  double fade_serving = 1.0;          // F_s0, typical serving link
  double fade_typical_cross = 1.0;    // G'_0, typical transmitter toward Y_p
  double fade_primary_cross = 1.0;    // primary transmitter toward the typical receiver
  bool typical_active = false;        // U'_0

  std::size_t size() const noexcept { return tx.size(); }
};

// In the typical_rx frame the pose must be given.
NetworkRealization sample_realization(const Scenario& sc, RngStream& rng, Frame frame,
                                      const PlacementPose& pose = {});

// Fraction of n cross-link fades for which the link is allowed to transmit.
EstimateWithCI estimate_map(const SecondaryLink& link, const PlacementPose& pose,
                            const Scenario& sc, std::int64_t n, RngStream& rng);

// Realization i uses RngStream(seed, i), so results do not depend on the
// thread count.
EstimateWithCI estimate_af(const Scenario& sc, std::int64_t n_realizations, std::uint64_t seed,
                           int threads = 1);
EstimateWithCI estimate_coverage_primary(double tau, const Scenario& sc,
                                         std::int64_t n_realizations, std::uint64_t seed,
                                         int threads = 1);
// Random placements draw a fresh pose per realization. A silent typical
// transmitter counts as outage.
EstimateWithCI estimate_coverage_secondary(double tau, const Scenario& sc,
                                           std::int64_t n_realizations, std::uint64_t seed,
                                           int threads = 1);

}  // namespace cognet
