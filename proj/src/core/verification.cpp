// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#include "core/verification.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "core/errors.hpp"
#include "core/specfun.hpp"

namespace dyonmap {

namespace {

using cplx = std::complex<double>;

// Equation terms reassembled from scratch (deliberately not calling
// mapping_rhs): LHS of the mapping equation; a solution nulls their sum.
struct EquationTerms {
  double t[7];
  double sum() const {
    double s = 0.0;
    for (double v : t) s += v;
    return s;
  }
  double scale() const {
    double s = 0.0;
    for (double v : t) s = std::max(s, std::abs(v));
    return s;
  }
};

EquationTerms assemble_terms(double r, const MassProfile::State& st,
                             const MappingParams& params, SpinBranch branch) {
  const double mu = params.q.mu.value();
  const double m = params.q.m.value();
  const double w = branch == SpinBranch::Up ? mu + m - 0.5 : mu + m + 0.5;
  const double x0 = std::cos(params.theta0);
  const double s2 = std::sin(params.theta0) * std::sin(params.theta0);
  const double na = static_cast<double>(params.q.n) * params.q.alpha_fs;
  const double coulomb_lhs = params.coulomb == CoulombConvention::SignedCharge
                                 ? 4.0 * na
                                 : 4.0 * std::abs(na);
  const double E = energy_level(params.q);
  const double bp1 = params.ordering.b + 1.0;
  const double grad2 = 2.0 * params.ordering.gradient_coeff();

  EquationTerms out{};
  out.t[0] = bp1 * (st.d2M + 2.0 * st.dM / r);
  out.t[1] = -grad2 * st.dM * st.dM / st.M;
  out.t[2] = 2.0 * radial_log_derivative(r, params.q) * st.dM;
  out.t[3] = 4.0 * mu * w * (1.0 - x0) / s2 * st.M / (r * r);
  out.t[4] = coulomb_lhs * st.M / r;
  out.t[5] = (-2.0 * params.sigma_r_eigenvalue * mu -
              2.0 * mu * mu * (1.0 - x0) * (1.0 - x0) / s2) *
             st.M / (r * r);
  out.t[6] = -2.0 * st.M * (st.M - 2.0 * params.q.m0) * E;
  return out;
}

std::vector<double> chebyshev_points(double lo, double hi, int count) {
  std::vector<double> pts(count);
  for (int i = 0; i < count; ++i) {
    const double c = std::cos(M_PI * (i + 0.5) / count);
    pts[i] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * c;
  }
  return pts;
}

// 5-point central stencils.
template <typename F>
auto fd1(const F& f, double t, double h) {
  return (-f(t + 2 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2 * h)) / (12.0 * h);
}

template <typename F>
auto fd2(const F& f, double t, double h) {
  return (-f(t + 2 * h) + 16.0 * f(t + h) - 30.0 * f(t) + 16.0 * f(t - h) -
          f(t - 2 * h)) /
         (12.0 * h * h);
}

void require_interior(double theta, double fd_step) {
  if (!(theta - 2 * fd_step > 0.0 && theta + 2 * fd_step < M_PI))
    throw std::domain_error("finite differences would cross a coordinate pole");
}

}  // namespace

ResidualReport ode_residual_of(const std::function<MassProfile::State(double)>& state,
                               double r_lo, double r_hi, const MappingParams& params,
                               SpinBranch branch, int sample_count) {
  if (sample_count < 1) throw std::invalid_argument("ode_residual: sample_count < 1");
  ResidualReport rep;
  rep.samples = sample_count;
  for (double r : chebyshev_points(r_lo, r_hi, sample_count)) {
    double rel = 0.0;
    try {
      const auto st = state(r);
      const auto terms = assemble_terms(r, st, params, branch);
      const double sc = terms.scale();
      rel = sc > 0.0 ? std::abs(terms.sum()) / sc : std::abs(terms.sum());
    } catch (const node_error&) {
      continue;  // singular coefficient exactly at a sample point
    }
    ++rep.evaluated;
    if (rel > rep.max_rel) {
      rep.max_rel = rel;
      rep.location_of_max = r;
    }
  }
  return rep;
}

ResidualReport ode_residual(const MassProfile& profile, const MappingParams& params,
                            SpinBranch branch, int sample_count) {
  if (profile.steps() < 2) throw std::invalid_argument("ode_residual: profile too short");
  // Keep samples strictly interior to the covered span.
  const double pad = 1e-9 * (profile.r_hi() - profile.r_lo());
  return ode_residual_of([&](double r) { return profile.eval(r); },
                         profile.r_lo() + pad, profile.r_hi() - pad, params, branch,
                         sample_count);
}

double branch_agreement(const MassProfile& up, const MassProfile& down, double r_lo,
                        double r_hi, int grid) {
  if (grid < 2) throw std::invalid_argument("branch_agreement: grid < 2");
  if (!up.covers(r_lo, r_hi) || !down.covers(r_lo, r_hi))
    throw std::out_of_range("branch_agreement: span not covered by both profiles");
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / (grid - 1);
    const double a = up.eval(r).M;
    const double b = down.eval(r).M;
    const double denom = std::max(std::abs(a), std::abs(b));
    if (denom == 0.0) continue;
    worst = std::max(worst, std::abs(a - b) / denom);
  }
  return worst;
}

std::complex<double> angular_action_coefficient(HalfInt mu, HalfInt l, HalfInt mprime,
                                                double theta, double phi, double fd_step) {
  require_interior(theta, fd_step);
  const auto y = [&](double t, double p) {
    return specfun::monopole_harmonic(mu, l, mprime, t, p);
  };
  const cplx val = y(theta, phi);
  if (std::abs(val) == 0.0)
    throw std::domain_error("angular_action_coefficient: harmonic vanishes at sample point");

  const auto f_theta = [&](double t) { return y(t, phi); };
  const auto f_phi = [&](double p) { return y(theta, p); };
  const double st = std::sin(theta), ct = std::cos(theta);
  const cplx lap = fd2(f_theta, theta, fd_step) + (ct / st) * fd1(f_theta, theta, fd_step) +
                   fd2(f_phi, phi, fd_step) / (st * st);

  const double x = ct;
  const double muv = mu.value();
  const double eig = mprime.value() + muv;  // exact d_phi eigenvalue / i
  const cplx azimuthal = cplx(0.0, 2.0 * muv * (1.0 - x) / (st * st)) * cplx(0.0, eig) * val;
  const cplx centrifugal = muv * muv * (1.0 - x) * (1.0 - x) / (st * st) * val;
  return (lap - azimuthal - centrifugal) / val;
}

OperatorCheck angular_operator_check(const QuantumNumbers& q, double theta, double phi,
                                     double fd_step) {
  if (q.mu.twice() < 1)
    throw std::invalid_argument("angular_operator_check: needs mu >= 1/2");
  if (!(fd_step >= 1e-6 && fd_step <= 1e-3))
    throw std::invalid_argument("angular_operator_check: fd_step outside [1e-6, 1e-3]");
  const double muv = q.mu.value();
  const cplx c_up =
      angular_action_coefficient(q.mu, q.mu, q.m - half_one(), theta, phi, fd_step);
  const cplx c_dn =
      angular_action_coefficient(q.mu, q.mu, q.m + half_one(), theta, phi, fd_step);
  OperatorCheck out;
  out.s_up = c_up.real() / muv;
  out.s_down = c_dn.real() / muv;
  out.spread = std::max({std::abs(out.s_up - out.s_down), std::abs(c_up.imag() / muv),
                         std::abs(c_dn.imag() / muv)});
  return out;
}

IdentityCheck k2_identity_check(const QuantumNumbers& q, double theta, double phi,
                                double fd_step) {
  require_interior(theta, fd_step);
  const double muv = q.mu.value();
  IdentityCheck out;
  if (q.mu.twice() == 0) {
    // Both sides vanish on the standard l = 0 harmonic.
    out.closing_sign = +1;
    out.notes = "mu = 0: identity trivially 0 = 0";
    return out;
  }

  double worst_plus = 0.0, worst_minus = 0.0;
  for (int comp = 0; comp < 2; ++comp) {
    const HalfInt mp = comp == 0 ? q.m - half_one() : q.m + half_one();
    const auto y = [&](double t, double p) {
      return specfun::monopole_harmonic(q.mu, q.mu, mp, t, p);
    };
    const cplx val = y(theta, phi);
    const auto f_theta = [&](double t) { return y(t, phi); };
    const auto f_phi = [&](double p) { return y(theta, p); };
    const double st = std::sin(theta), x = std::cos(theta);

    // L^2 with every derivative by finite differences.
    const cplx l2 = -(fd2(f_theta, theta, fd_step) +
                      (x / st) * fd1(f_theta, theta, fd_step)) -
                    fd2(f_phi, phi, fd_step) / (st * st) +
                    cplx(0.0, 2.0 * muv * (1.0 - x) / (st * st)) * fd1(f_phi, phi, fd_step) +
                    (muv * muv * (1.0 - x) * (1.0 - x) / (st * st) + muv * muv) * val;
    const cplx lhs = muv * muv * val - l2;
    // With K Omega = -Omega the right side reduces to mu (sigma.r) Omega.
    worst_plus = std::max(worst_plus, std::abs(lhs - muv * val) / (muv * std::abs(val)));
    worst_minus = std::max(worst_minus, std::abs(lhs + muv * val) / (muv * std::abs(val)));
  }
  out.residual_plus = worst_plus;
  out.residual_minus = worst_minus;
  out.closing_sign = worst_minus <= worst_plus ? -1 : +1;
  out.notes = std::string("identity closes under sigma.r = ") +
              (out.closing_sign > 0 ? "+1" : "-1");
  return out;
}

std::complex<double> pde_residual_at_point(const MassProfile& profile,
                                           const MappingParams& params, SpinBranch branch,
                                           double r, double theta, double phi,
                                           double fd_step) {
  require_interior(theta, fd_step);
  if (!profile.covers(r)) throw std::out_of_range("pde_residual_at_point: r not covered");
  const QuantumNumbers& q = params.q;
  // The spinor tower degenerates at mu = 0; the scalar s-wave factor stands in.
  const bool scalar = q.mu.twice() == 0;
  const HalfInt mp = scalar ? HalfInt(0)
                            : (branch == SpinBranch::Up ? q.m - half_one() : q.m + half_one());
  const double coeff =
      scalar ? 1.0
             : (branch == SpinBranch::Up
                    ? -std::sqrt(static_cast<double>((q.mu - q.m + half_one()).twice()) /
                                 static_cast<double>((q.mu + q.mu + HalfInt(1)).twice()))
                    : std::sqrt(static_cast<double>((q.mu + q.m + half_one()).twice()) /
                                static_cast<double>((q.mu + q.mu + HalfInt(1)).twice())));

  const auto omega = [&](double t, double p) {
    return coeff * specfun::monopole_harmonic(q.mu, scalar ? HalfInt(0) : q.mu, mp, t, p);
  };
  const cplx om = omega(theta, phi);

  // Radial factor, analytic.
  const double k = wavenumber(q);
  const double xr = 2.0 * k * r;
  const double L = specfun::kummer_poly(q.N, 2.0, xr);
  const double Lp = specfun::kummer_poly_derivative(q.N, 2.0, xr);
  const double Lpp = specfun::kummer_poly_second_derivative(q.N, 2.0, xr);
  const double F = std::exp(-k * r) * L;
  const double Fp = std::exp(-k * r) * (-k * L + 2.0 * k * Lp);
  const double Fpp = std::exp(-k * r) * (k * k * L - 4.0 * k * k * Lp + 4.0 * k * k * Lpp);

  const auto st_prof = profile.eval(r);
  const double M = st_prof.M;
  const double Ueff = effective_potential(M, st_prof.dM, st_prof.d2M, r, params.ordering);
  const double E = energy_level(q);

  const auto f_theta = [&](double t) { return omega(t, phi); };
  const auto f_phi = [&](double p) { return omega(theta, p); };
  const double sth = std::sin(theta), cth = std::cos(theta);
  const cplx ang = fd2(f_theta, theta, fd_step) + (cth / sth) * fd1(f_theta, theta, fd_step) +
                   fd2(f_phi, phi, fd_step) / (sth * sth);

  const cplx kinetic = -(1.0 / M) * (om * (Fpp + 2.0 * Fp / r) + F * ang / (r * r));
  const cplx drift = (st_prof.dM / (M * M)) * Fp * om;
  const cplx potential = Ueff * F * om;
  const cplx energy = E * F * om;

  const cplx resid = kinetic + drift + potential - energy;
  // |E psi| is the natural scale; at E = 0 fall back to |psi| so an exact
  // free solution reports ~0 rather than normalized stencil noise.
  const double scale = E != 0.0 ? std::abs(energy) : std::max(std::abs(F * om), 1e-300);
  return resid / scale;
}

}  // namespace dyonmap
