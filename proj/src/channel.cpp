#include "ntn/channel.hpp"

#include <cmath>
#include <string>

#include "ntn/special.hpp"

namespace ntn {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310005024;

double los_base(double h_user, const NetworkConfig& net,
                const EnvironmentParams& env) {
  const double dh = std::fabs(h_user - net.h_b);
  if (dh < kMinHeightGap) {
    throw config_error(
        "h_user: degenerate geometry, |h_user - h_b| < 1e-6 m makes the LoS "
        "model singular");
  }
  const double dq =
      std::fabs(q_function(h_user / env.xi) - q_function(net.h_b / env.xi));
  const double base = 1.0 - kSqrt2Pi * env.xi / dh * dq;
  if (!(base > 0.0) || !(base < 1.0)) {
    throw config_error(
        "xi: LoS base " + std::to_string(base) +
        " outside (0,1); obstacle scale incompatible with these heights");
  }
  return base;
}

}  // namespace

double los_probability_at_height(double r, double h_user,
                                 const NetworkConfig& net,
                                 const EnvironmentParams& env) {
  const double base = los_base(h_user, net, env);
  return std::pow(base, r * std::sqrt(env.mu * env.nu));
}

double los_probability(double r, UserType user, const NetworkConfig& net,
                       const EnvironmentParams& env) {
  return los_probability_at_height(r, net.user_height(user), net, env);
}

double class_probability(double r, LinkClass v, UserType user,
                         const NetworkConfig& net,
                         const EnvironmentParams& env) {
  const double pl = los_probability(r, user, net, env);
  return v == LinkClass::Los ? pl : 1.0 - pl;
}

double los_decay_rate(double h_user, const NetworkConfig& net,
                      const EnvironmentParams& env) {
  return -std::sqrt(env.mu * env.nu) * std::log(los_base(h_user, net, env));
}

double path_loss_at_height(double r, double h_user, LinkClass link,
                           const NetworkConfig& net,
                           const EnvironmentParams& env) {
  const double dh = h_user - net.h_b;
  const double d2 = r * r + dh * dh;
  return std::pow(d2, -0.5 * env.alpha(link));
}

double path_loss(double r, UserType user, LinkClass link,
                 const NetworkConfig& net, const EnvironmentParams& env) {
  return path_loss_at_height(r, net.user_height(user), link, net, env);
}

double elevation_angle_deg(double r, double h_user, const NetworkConfig& net) {
  const double dh = h_user - net.h_b;
  if (r <= 0.0) return dh >= 0.0 ? 90.0 : -90.0;
  return 57.295779513082320877 * std::atan(dh / r);
}

double sample_fading(LinkClass link, const EnvironmentParams& env, Rng& rng) {
  return rng.gamma_unit_mean(env.nakagami_shape(link));
}

}  // namespace ntn
