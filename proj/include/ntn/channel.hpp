#pragma once

#include "ntn/rng.hpp"
#include "ntn/types.hpp"

namespace ntn {

/// LoS probability p_L(r) at horizontal distance r for the given user
/// height. Decays exponentially in r; p_L(0) = 1.
double los_probability(double r, UserType user, const NetworkConfig& net,
                       const EnvironmentParams& env);

/// Same model with an explicit user height (Monte Carlo draws random
/// aerial heights, so the fixed per-type height is not always the one
/// in play).
double los_probability_at_height(double r, double h_user,
                                 const NetworkConfig& net,
                                 const EnvironmentParams& env);

inline double nlos_probability(double r, UserType user,
                               const NetworkConfig& net,
                               const EnvironmentParams& env) {
  return 1.0 - los_probability(r, user, net, env);
}

double class_probability(double r, LinkClass v, UserType user,
                         const NetworkConfig& net, const EnvironmentParams& env);

/// Decay rate k of p_L(r) = exp(-k r). The base of the power form is
/// constant in r, so the model is exactly exponential.
double los_decay_rate(double h_user, const NetworkConfig& net,
                      const EnvironmentParams& env);

/// Distance-dependent path loss (r^2 + (h_user - h_b)^2)^(-alpha_v/2).
double path_loss(double r, UserType user, LinkClass link,
                 const NetworkConfig& net, const EnvironmentParams& env);

double path_loss_at_height(double r, double h_user, LinkClass link,
                           const NetworkConfig& net,
                           const EnvironmentParams& env);

/// Elevation angle from the BS antenna to the user, in degrees. Negative
/// toward ground users, positive toward aerial users; +-90 at r = 0.
double elevation_angle_deg(double r, double h_user, const NetworkConfig& net);

inline double elevation_angle_deg(double r, UserType user,
                                  const NetworkConfig& net) {
  return elevation_angle_deg(r, net.user_height(user), net);
}

/// Nakagami-m power fading draw: Gamma(m_v, rate m_v), unit mean.
double sample_fading(LinkClass link, const EnvironmentParams& env, Rng& rng);

}  // namespace ntn
