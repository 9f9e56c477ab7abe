#ifndef ROGUEWAVE_PROFILES_HPP_
#define ROGUEWAVE_PROFILES_HPP_

#include "roguewave/model.hpp"

namespace roguewave {

enum class Side { West, East };

const char* to_string(Side side);

// One of the two travelling profiles. Depth is a monotone function of the
// position relative to the translating anchor, where q = q_p.
//   East: q in (q_star, q_p], decreasing in x, speed c_star.
//   West: q in (q_0, q_ref], increasing in x, speed A_ref. Depths above q_p
//         are the crest extension used once the shock forms.
struct ProfileBranch {
  Side side = Side::East;
  WaveLine line;
  double q_min = 0.0;  // exclusive
  double q_max = 0.0;  // inclusive
  double q_anchor = 0.0;
  double speed = 0.0;
};

ProfileBranch make_branch(Side side, const WaveConfig& config);

// dx/dq of the travelling-wave reduction of the friction Saint-Venant system,
//   (B^2 - g q^3) / (k (A q - B) |A q - B|),
// evaluated in factored form on the branch line.
double psi_prime(double q, const ProfileBranch& branch,
                 const WaveConfig& config);

// Closed-form inverse profiles, zero at q_p.
double psi_east(double q, const WaveConfig& config);
double psi_west(double q, const WaveConfig& config);
double psi(double q, const ProfileBranch& branch, const WaveConfig& config);

// Numeric integral of psi_prime from q_anchor to q. Independent of the closed
// forms; used to validate them.
double quadrature_oracle(double q, const ProfileBranch& branch,
                         const WaveConfig& config);

// Depth q with psi(q) = x_shifted, by bisection on the monotone branch.
double invert_profile(double x_shifted, const ProfileBranch& branch,
                      const WaveConfig& config);

// Depth of the branch translated to time t.
double profile_depth(double x, double t, const ProfileBranch& branch,
                     const WaveConfig& config);

struct Admissibility {
  double lambda_min = 0.0;      // shortest admissible wavelength, m
  double profile_extent = 0.0;  // shorter branch 90%-decay distance, m
  bool admissible = true;
};

Admissibility assess_admissibility(const WaveConfig& config,
                                   const PhysicalConstants& consts);

}  // namespace roguewave

#endif  // ROGUEWAVE_PROFILES_HPP_
