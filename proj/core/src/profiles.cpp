#include "roguewave/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "roguewave/errors.hpp"
#include "roguewave/numerics.hpp"

namespace roguewave {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Beyond this many log e-folding lengths the East depth equals q_star to
// machine precision.
constexpr double kEastTailFoldings = 50.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_wave(const WaveConfig& config, const char* what) {
  if (config.flat()) {
    throw DomainError(std::string(what) + ": flat configuration has no profile");
  }
}

}  // namespace

const char* to_string(Side side) {
  return side == Side::West ? "west" : "east";
}

ProfileBranch make_branch(Side side, const WaveConfig& config) {
  ProfileBranch b;
  b.side = side;
  b.q_anchor = config.q_p;
  if (side == Side::East) {
    b.line = config.east_line;
    b.q_min = config.q_star;
    b.q_max = config.q_p;
    b.speed = config.c_star;
  } else {
    b.line = config.west_line;
    b.q_min = config.q_0;
    b.q_max = config.q_ref;
    b.speed = config.a_ref;
  }
  return b;
}

double psi_prime(double q, const ProfileBranch& branch,
                 const WaveConfig& config) {
  require_wave(config, "psi_prime");
  if (!(q > branch.q_min)) {
    throw DomainError(std::string("psi_prime: ") + to_string(branch.side) +
                      " profile singular at q <= " + num(branch.q_min));
  }
  if (q > branch.q_max) {
    throw DomainError(std::string("psi_prime: ") + to_string(branch.side) +
                      " depth above " + num(branch.q_max));
  }
  const double g = config.g;
  const double a = branch.line.a;
  if (branch.side == Side::East) {
    // B^2 = g q_star^3 and A q - B = c_star (q - q_star).
    const double qs = config.q_star;
    const double d = q - qs;
    return -g * (qs * qs + qs * q + q * q) / (config.k * a * a * d);
  }
  // B^2 = g q_ref^3 and A q - B = A_ref (q - q_0).
  const double qr = config.q_ref;
  const double d = q - config.q_0;
  return g * (qr - q) * (qr * qr + qr * q + q * q) /
         (config.k * a * a * d * d);
}

double psi_east(double q, const WaveConfig& config) {
  require_wave(config, "psi_east");
  const double qs = config.q_star;
  const double qp = config.q_p;
  const double k = config.k;
  if (!(q > qs && q <= qp)) {
    throw DomainError("psi_east: depth " + num(q) + " outside (" + num(qs) +
                      ", " + num(qp) + "]");
  }
  const double log_term = -std::log1p((q - qp) / (qp - qs));
  return 3.0 * qs / k * log_term +
         (qp - q) * (2.0 / k + (qp + q) / (2.0 * k * qs));
}

double psi_west(double q, const WaveConfig& config) {
  require_wave(config, "psi_west");
  const double q0 = config.q_0;
  const double qp = config.q_p;
  const double qr = config.q_ref;
  if (!(q > q0 && q <= qr)) {
    throw DomainError("psi_west: depth " + num(q) + " outside (" + num(q0) +
                      ", " + num(qr) + "]");
  }
  const double scale = q0 / qr;
  const double K = scale * scale / config.k;  // 1 / (k (F_ref + 1)^2)
  const double cube_gap = (qr - q0) * (qr * qr + qr * q0 + q0 * q0);
  const double bracket =
      (qp - q) * ((qp + q) / (2.0 * qr) + 2.0 * q0 / qr) -
      3.0 * q0 * q0 / qr * std::log1p((q - qp) / (qp - q0)) +
      cube_gap * (q - qp) / (qr * (q - q0) * (qp - q0));
  return K * bracket;
}

double psi(double q, const ProfileBranch& branch, const WaveConfig& config) {
  return branch.side == Side::East ? psi_east(q, config)
                                   : psi_west(q, config);
}

double quadrature_oracle(double q, const ProfileBranch& branch,
                         const WaveConfig& config) {
  require_wave(config, "quadrature_oracle");
  if (!(q > branch.q_min && q <= branch.q_max)) {
    throw DomainError(std::string("quadrature_oracle: depth outside ") +
                      to_string(branch.side) + " branch");
  }
  if (q == branch.q_anchor) return 0.0;
  const auto r = integrate(
      [&](double s) { return psi_prime(s, branch, config); }, branch.q_anchor,
      q, 1e-12, 1e-12);
  if (r.error > 1e-9 * std::abs(r.value) + 1e-9) {
    throw QuadratureError("quadrature_oracle: tolerance not met");
  }
  return r.value;
}

double invert_profile(double x_shifted, const ProfileBranch& branch,
                      const WaveConfig& config) {
  require_wave(config, "invert_profile");
  if (std::isnan(x_shifted)) throw DomainError("invert_profile: NaN position");
  const double tol = 1e-9 * std::max(1.0, std::abs(x_shifted));

  if (branch.side == Side::East) {
    if (x_shifted < 0.0) {
      throw DomainError("invert_profile: east branch needs x_shifted >= 0, got " +
                        num(x_shifted));
    }
    if (x_shifted == 0.0) return config.q_p;
    const double folding = 3.0 * config.q_star / config.k;
    if (x_shifted > kEastTailFoldings * folding) return config.q_star;
    auto f = [&](double q) { return psi_east(q, config) - x_shifted; };
    return bisect(f, config.q_star, config.q_p, kInf, -x_shifted);
  }

  const double x_crest = psi_west(config.q_ref, config);
  if (x_shifted > x_crest) {
    if (x_shifted - x_crest <= tol) return config.q_ref;
    throw DomainError("invert_profile: west branch needs x_shifted <= " +
                      num(x_crest) + ", got " + num(x_shifted));
  }
  if (x_shifted == 0.0) return config.q_p;
  auto f = [&](double q) { return psi_west(q, config) - x_shifted; };
  return bisect(f, config.q_0, config.q_ref, -kInf, x_crest - x_shifted);
}

double profile_depth(double x, double t, const ProfileBranch& branch,
                     const WaveConfig& config) {
  if (config.flat()) return config.q_star;
  return invert_profile(x - branch.speed * t, branch, config);
}

Admissibility assess_admissibility(const WaveConfig& config,
                                   const PhysicalConstants& consts) {
  Admissibility a;
  a.lambda_min = min_wavelength(config.q_star, consts.n_interactions, consts);
  if (config.flat()) {
    a.profile_extent = kInf;
    return a;
  }
  const double east = psi_east(
      config.q_star + 0.1 * (config.q_p - config.q_star), config);
  const double west =
      -psi_west(config.q_0 + 0.1 * (config.q_p - config.q_0), config);
  a.profile_extent = std::min(east, west);
  a.admissible = a.profile_extent >= a.lambda_min;
  return a;
}

}  // namespace roguewave
