#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ntn {

/// User population: ground users at h_g, aerial users (UAVs) at h_a.
enum class UserType { Ground, Aerial };

/// Propagation class of a BS-user link.
enum class LinkClass { Los, Nlos };

/// Base-station population a BS belongs to. Shared BSs serve both user
/// types (IS scheme); Ground/Aerial BSs serve one type each (ES scheme).
enum class BsType { Shared, Ground, Aerial };

enum class Scheme { Inclusive, Exclusive };

enum class AssociationRule { Nearest, Strongest };

enum class OutageMode { General, NoiseLimited };

enum class Method { Analytic, MonteCarlo, ClosedForm };

/// Thrown on invalid parameter combinations; the message names the field.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an adaptive integral fails to converge. Carries the tier
/// and transform argument for context.
class numeric_failure : public std::runtime_error {
 public:
  numeric_failure(const std::string& what, int tier, double z)
      : std::runtime_error(what), tier(tier), z(z) {}
  int tier = 0;
  double z = 0.0;
};

/// Thrown when a quantity has no analytic form (e.g. strongest-rule
/// association) and the caller must use the Monte Carlo path.
class unsupported_analytic : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Configurations below h_user == h_b are rejected: the LoS model is
// singular there.
inline constexpr double kMinHeightGap = 1e-6;  // m

struct EnvironmentParams {
  double mu = 0.5;          // blockage density parameter
  double nu = 3e-4;         // blockage density parameter
  double xi = 40.0;         // obstacle height scale [m]
  double alpha_los = 2.5;   // LoS path-loss exponent
  double alpha_nlos = 3.5;  // NLoS path-loss exponent
  int m_los = 3;            // Nakagami shape, LoS
  int m_nlos = 1;           // Nakagami shape, NLoS (Rayleigh)

  int nakagami_shape(LinkClass v) const {
    return v == LinkClass::Los ? m_los : m_nlos;
  }
  double alpha(LinkClass v) const {
    return v == LinkClass::Los ? alpha_los : alpha_nlos;
  }
  void validate() const;
};

struct NetworkConfig {
  double lambda_b = 1e-5;             // total BS density [BS/m^2]
  double interference_fraction = 0.5; // kappa = lambda_I / lambda_b, in [0,1]
  double h_b = 30.0;                  // BS antenna height [m]
  double h_g = 0.0;                   // ground-user height [m]
  double h_a = 50.0;                  // aerial-user height [m]
  double rho_g = 0.5;                 // ground-user ratio, in [0,1]
  double p_t = 3.5;                   // transmit power [W]
  double noise = 1e-9;                // noise power [W]
  double gamma_t = 1.0;               // target SINR (linear)
  double au_height_spread = 0.0;      // aerial height half-range [m], MC only

  double user_height(UserType u) const {
    return u == UserType::Ground ? h_g : h_a;
  }
  double user_ratio(UserType u) const {
    return u == UserType::Ground ? rho_g : 1.0 - rho_g;
  }
  void validate() const;
};

struct SchemeConfig {
  Scheme scheme = Scheme::Inclusive;
  double tilt_g = 0.0;  // tilt of BSs serving ground users [deg]
  double tilt_a = 0.0;  // tilt of BSs serving aerial users [deg]
  double rho_bg = 0.5;  // ground-BS ratio (ES only)

  static SchemeConfig inclusive(double tilt) {
    return SchemeConfig{Scheme::Inclusive, tilt, tilt, 0.5};
  }
  static SchemeConfig exclusive(double tilt_g, double tilt_a, double rho_bg) {
    return SchemeConfig{Scheme::Exclusive, tilt_g, tilt_a, rho_bg};
  }

  /// Tilt of the BS population that serves user type u.
  double tilt_for(UserType u) const {
    return u == UserType::Ground ? tilt_g : tilt_a;
  }
  /// Tilt used by BSs of population t when they transmit.
  double tilt_of_bs(BsType t) const {
    return t == BsType::Aerial ? tilt_a : (t == BsType::Ground ? tilt_g : tilt_g);
  }
  /// BS population serving user type u under this scheme.
  BsType serving_bs_type(UserType u) const {
    if (scheme == Scheme::Inclusive) return BsType::Shared;
    return u == UserType::Ground ? BsType::Ground : BsType::Aerial;
  }
  /// Density of BSs eligible to serve user type u.
  double serving_density(UserType u, const NetworkConfig& net) const {
    if (scheme == Scheme::Inclusive) return net.lambda_b;
    return (u == UserType::Ground ? rho_bg : 1.0 - rho_bg) * net.lambda_b;
  }
  /// Density of population t (equals lambda_b for shared BSs).
  double bs_type_density(BsType t, const NetworkConfig& net) const {
    if (t == BsType::Shared) return net.lambda_b;
    return (t == BsType::Ground ? rho_bg : 1.0 - rho_bg) * net.lambda_b;
  }
  void validate() const;
};

struct OutageEstimate {
  double p = 0.0;
  Method method = Method::Analytic;
  double ci_halfwidth = 0.0;  // 0 for analytic results
};

inline const char* to_string(UserType u) {
  return u == UserType::Ground ? "G" : "A";
}
inline const char* to_string(LinkClass v) {
  return v == LinkClass::Los ? "LoS" : "NLoS";
}
inline const char* to_string(Scheme s) {
  return s == Scheme::Inclusive ? "IS" : "ES";
}
inline const char* to_string(Method m) {
  switch (m) {
    case Method::Analytic: return "analytic";
    case Method::MonteCarlo: return "monte_carlo";
    default: return "closed_form";
  }
}
inline const char* to_string(OutageMode m) {
  return m == OutageMode::General ? "general" : "noise_limited";
}
inline const char* to_string(AssociationRule r) {
  return r == AssociationRule::Nearest ? "nearest" : "strongest";
}

}  // namespace ntn
