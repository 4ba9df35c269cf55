#pragma once

#include <array>
#include <cmath>

#include "ntn/types.hpp"

namespace ntn {

/// 3GPP-style vertical pattern: parabolic main lobe clamped at the
/// side-lobe floor eta_db. theta_th is the half-width (deg) of the
/// elevation band served by the main lobe.
struct AntennaPattern {
  double theta_3db = 10.0;  // deg
  double eta_db = 20.0;     // side-lobe floor [dB]

  double theta_th() const { return theta_3db * std::sqrt(eta_db / 12.0); }
  double side_lobe_gain() const { return std::pow(10.0, -eta_db / 10.0); }
  void validate() const;
};

/// Radii splitting the plane into gain tiers for one (user, tilt):
/// tier 1 = (b1, b2), tier 2 = [b2, b3] (main lobe), tier 3 = (b3, b4),
/// with b1 = 0 and b4 = inf. Degenerate (empty) tiers are allowed.
struct TierBoundaries {
  std::array<double, 4> b{0.0, 0.0, 0.0, 0.0};

  double lower(int tier) const { return b[tier - 1]; }
  double upper(int tier) const { return b[tier]; }
  bool empty_tier(int tier) const { return !(upper(tier) > lower(tier)); }

  /// Tier of a radius; boundary ties go to the main lobe.
  int tier_of(double r) const {
    if (r < b[1]) return 1;
    if (r <= b[2]) return 2;
    return 3;
  }
};

/// Vertical antenna power gain toward a user of type `user` at
/// horizontal distance r, for a BS tilted by tilt_deg (down-tilt > 0).
double gain(double r, double tilt_deg, UserType user, const NetworkConfig& net,
            const AntennaPattern& pattern);

double gain_at_height(double r, double tilt_deg, double h_user,
                      const NetworkConfig& net, const AntennaPattern& pattern);

/// Lower/upper radii of the main-lobe annulus for this user type and
/// tilt. Branches that never reach the main lobe come back infinite.
TierBoundaries main_lobe_boundaries(double tilt_deg, UserType user,
                                    const NetworkConfig& net,
                                    const AntennaPattern& pattern);

TierBoundaries main_lobe_boundaries_at_height(double tilt_deg, double h_user,
                                              const NetworkConfig& net,
                                              const AntennaPattern& pattern);

/// |r_ub - r_lb|; infinite outside the regimes where both are finite.
double main_lobe_width(double tilt_deg, UserType user, const NetworkConfig& net,
                       const AntennaPattern& pattern);

int tier_of(double r, double tilt_deg, UserType user, const NetworkConfig& net,
            const AntennaPattern& pattern);

/// Two-level gain model: g_main on the main-lobe annulus, g_side outside.
double simplified_gain(double r, double tilt_deg, UserType user,
                       const NetworkConfig& net, const AntennaPattern& pattern,
                       double g_side, double g_main);

}  // namespace ntn
