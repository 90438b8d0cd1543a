// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#include "core/ode_solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

#include "core/errors.hpp"

namespace dyonmap {

const char* to_string(TerminationKind k) {
  switch (k) {
    case TerminationKind::ReachedEnd: return "reached-end";
    case TerminationKind::BlowUp: return "blow-up";
    case TerminationKind::MassVanished: return "mass-vanished";
    case TerminationKind::StepUnderflow: return "step-underflow";
    case TerminationKind::RadialNode: return "radial-node";
  }
  return "unknown";
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double C2 = 1.0 / 5, C3 = 3.0 / 10, C4 = 4.0 / 5, C5 = 8.0 / 9;
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double A71 = 35.0 / 384, A73 = 500.0 / 1113, A74 = 125.0 / 192,
                 A75 = -2187.0 / 6784, A76 = 11.0 / 84;
// Error weights b5 - b4.
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920,
                 E5 = -17253.0 / 339200, E6 = 22.0 / 525, E7 = -1.0 / 40;

using Vec2 = std::array<double, 2>;

// Monomial coefficients of the quintic matching (p, m, s) at sigma = 0 and 1,
// where m and s are the first and second derivatives scaled by h and h^2.
std::array<double, 6> hermite_quintic(double p0, double m0, double s0, double p1,
                                      double m1, double s1) {
  const double dp = p1 - p0;
  std::array<double, 6> c{};
  c[0] = p0;
  c[1] = m0;
  c[2] = 0.5 * s0;
  c[3] = 10.0 * dp - 6.0 * m0 - 4.0 * m1 - 1.5 * s0 + 0.5 * s1;
  c[4] = -15.0 * dp + 8.0 * m0 + 7.0 * m1 + 1.5 * s0 - s1;
  c[5] = 6.0 * dp - 3.0 * (m0 + m1) - 0.5 * (s0 - s1);
  return c;
}

double poly_eval(const std::array<double, 6>& c, double s) {
  double acc = 0.0;
  for (int i = 5; i >= 0; --i) acc = acc * s + c[i];
  return acc;
}

double poly_deriv(const std::array<double, 6>& c, double s) {
  double acc = 0.0;
  for (int i = 5; i >= 1; --i) acc = acc * s + i * c[i];
  return acc;
}

double poly_second_deriv(const std::array<double, 6>& c, double s) {
  double acc = 0.0;
  for (int i = 5; i >= 2; --i) acc = acc * s + i * (i - 1) * c[i];
  return acc;
}

}  // namespace

MassProfile::State MassProfile::eval(double r) const {
  if (!covers(r)) throw std::out_of_range("MassProfile::eval: r outside covered span");
  if (steps_.empty()) return {nodes_.front()[1], nodes_.front()[2], 0.0};
  // Steps are monotone in r0 along the integration direction; binary search.
  const bool fwd = forward();
  std::size_t lo = 0, hi = steps_.size();
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    const double rm = steps_[mid].r0;
    if (fwd ? r >= rm : r <= rm)
      lo = mid;
    else
      hi = mid;
  }
  const Step& st = steps_[lo];
  double s = (r - st.r0) / st.h;
  s = std::clamp(s, 0.0, 1.0);
  State out;
  out.M = poly_eval(st.c, s);
  out.dM = poly_deriv(st.c, s) / st.h;
  out.d2M = poly_second_deriv(st.c, s) / (st.h * st.h);
  return out;
}

class Dopri5 {
 public:
  Dopri5(const Rhs& rhs, const IntegratorOptions& opts) : rhs_(rhs), opts_(opts) {}

  MassProfile run(double r_start, double M0, double dM0, double r_end) {
    if (r_start == r_end) throw std::invalid_argument("integrate_ivp: empty span");
    if (!(opts_.rel_tol > 0.0) || !(opts_.abs_tol > 0.0))
      throw std::invalid_argument("integrate_ivp: tolerances must be positive");
    if (opts_.mass_floor > 0.0 && M0 <= opts_.mass_floor)
      throw std::invalid_argument("integrate_ivp: M0 at or below the mass floor");

    MassProfile prof;
    prof.r_start_ = r_start;
    prof.nodes_.push_back({r_start, M0, dM0});

    double r = r_start;
    Vec2 y{M0, dM0};
    const double dir = r_end > r_start ? 1.0 : -1.0;
    double h = dir * 1e-4 * std::abs(r_end - r_start);
    double facold = 1e-4;

    Vec2 k1;
    if (!eval_rhs(r, y, k1)) {
      // Singular right at the start; refine toward it from a zero-length span.
      prof.r_stop_ = r;
      prof.termination_ = {TerminationKind::RadialNode, r};
      return prof;
    }

    for (long step = 0; step < kMaxSteps; ++step) {
      if ((r + h - r_end) * dir > 0.0) h = r_end - r;
      if (std::abs(h) < kUnderflowFactor * std::max(std::abs(r), 1e-3)) {
        prof.r_stop_ = r;
        prof.termination_ = {TerminationKind::StepUnderflow, r};
        return prof;
      }

      Vec2 k2, k3, k4, k5, k6, k7, ynew;
      bool ok = true;
      Vec2 yt;
      auto stage = [&](double c, const Vec2& incr, Vec2& k) {
        yt = {y[0] + h * incr[0], y[1] + h * incr[1]};
        if (!eval_rhs(r + c * h, yt, k)) ok = false;
      };
      stage(C2, {A21 * k1[0], A21 * k1[1]}, k2);
      if (ok) stage(C3, {A31 * k1[0] + A32 * k2[0], A31 * k1[1] + A32 * k2[1]}, k3);
      if (ok)
        stage(C4, {A41 * k1[0] + A42 * k2[0] + A43 * k3[0],
                   A41 * k1[1] + A42 * k2[1] + A43 * k3[1]}, k4);
      if (ok)
        stage(C5, {A51 * k1[0] + A52 * k2[0] + A53 * k3[0] + A54 * k4[0],
                   A51 * k1[1] + A52 * k2[1] + A53 * k3[1] + A54 * k4[1]}, k5);
      if (ok)
        stage(1.0, {A61 * k1[0] + A62 * k2[0] + A63 * k3[0] + A64 * k4[0] + A65 * k5[0],
                    A61 * k1[1] + A62 * k2[1] + A63 * k3[1] + A64 * k4[1] + A65 * k5[1]}, k6);
      if (ok) {
        ynew = {y[0] + h * (A71 * k1[0] + A73 * k3[0] + A74 * k4[0] + A75 * k5[0] + A76 * k6[0]),
                y[1] + h * (A71 * k1[1] + A73 * k3[1] + A74 * k4[1] + A75 * k5[1] + A76 * k6[1])};
        if (!eval_rhs(r + h, ynew, k7)) ok = false;
      }

      if (!ok) {
        // A stage hit a singular coefficient (radial node or M <= 0): shrink
        // toward it. When h underflows the last reachable point marks the node.
        h *= 0.5;
        if (std::abs(h) < kUnderflowFactor * std::max(std::abs(r), 1e-3)) {
          prof.r_stop_ = r;
          prof.termination_ = {TerminationKind::RadialNode, r};
          return prof;
        }
        continue;
      }

      double err = 0.0;
      for (int i = 0; i < 2; ++i) {
        const double e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] +
                              E6 * k6[i] + E7 * k7[i]);
        const double sc = opts_.abs_tol +
                          opts_.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
        err += (e / sc) * (e / sc);
      }
      err = std::sqrt(err / 2.0);

      const double expo1 = 0.2 - kBeta * 0.75;
      const double fac11 = std::pow(std::max(err, 1e-32), expo1);
      double fac = fac11 / std::pow(facold, kBeta);
      fac = std::max(kInvFacMax, std::min(kInvFacMin, fac / kSafe));
      double hnew = h / fac;

      if (err <= 1.0) {
        facold = std::max(err, 1e-4);
        MassProfile::Step st;
        st.r0 = r;
        st.h = h;
        // k1 = (M', M'') at the left endpoint, k7 at the right (FSAL pair).
        st.c = hermite_quintic(y[0], h * y[1], h * h * k1[1], ynew[0], h * ynew[1],
                               h * h * k7[1]);
        prof.steps_.push_back(st);

        if (auto ev = detect_event(st, y[0], ynew[0])) {
          const auto [kind, s_event] = *ev;
          const double r_event = r + s_event * h;
          prof.r_stop_ = r_event;
          prof.nodes_.push_back({r_event, poly_eval(st.c, s_event),
                                 poly_deriv(st.c, s_event) / h});
          prof.termination_ = {kind, r_event};
          return prof;
        }

        r += h;
        y = ynew;
        k1 = k7;  // FSAL
        prof.nodes_.push_back({r, y[0], y[1]});

        if ((r_end - r) * dir <= 1e-14 * std::max(1.0, std::abs(r_end))) {
          prof.r_stop_ = r;
          prof.termination_ = {TerminationKind::ReachedEnd, r};
          return prof;
        }
        if (last_rejected_) hnew = dir * std::min(std::abs(hnew), std::abs(h));
        last_rejected_ = false;
      } else {
        hnew = h / std::min(kInvFacMin, fac11 / kSafe);
        last_rejected_ = true;
      }
      h = hnew;
    }
    prof.r_stop_ = r;
    prof.termination_ = {TerminationKind::StepUnderflow, r};
    return prof;
  }

 private:
  static constexpr long kMaxSteps = 5000000;
  static constexpr double kUnderflowFactor = 1e-14;
  static constexpr double kSafe = 0.9, kBeta = 0.04;
  static constexpr double kInvFacMax = 0.1;  // h may grow at most 10x
  static constexpr double kInvFacMin = 5.0;  // h may shrink at most 5x

  bool eval_rhs(double r, const Vec2& y, Vec2& k) {
    try {
      k[0] = y[1];
      k[1] = rhs_(r, y[0], y[1]);
      return std::isfinite(k[1]);
    } catch (const node_error&) {
      return false;
    } catch (const mass_singularity_error&) {
      return false;
    }
  }

  // Checks an accepted step for threshold crossings; returns the earliest
  // event and its dense-output location, refined by bisection to 1e-10 in r.
  std::optional<std::pair<TerminationKind, double>> detect_event(
      const MassProfile::Step& st, double M_begin, double M_end) {
    auto crossed = [&](double M) {
      if (std::abs(M) >= opts_.blowup_threshold) return TerminationKind::BlowUp;
      if (opts_.mass_floor > 0.0 && M <= opts_.mass_floor)
        return TerminationKind::MassVanished;
      return TerminationKind::ReachedEnd;  // sentinel: no event
    };
    (void)M_begin;
    // Scan a few interior points too: an excursion can peak inside a step.
    double s_bad = -1.0;
    TerminationKind kind = TerminationKind::ReachedEnd;
    for (double s : {0.25, 0.5, 0.75, 1.0}) {
      const double M = s == 1.0 ? M_end : poly_eval(st.c, s);
      const auto k = crossed(M);
      if (k != TerminationKind::ReachedEnd) {
        s_bad = s;
        kind = k;
        break;
      }
    }
    if (s_bad < 0.0) return std::nullopt;
    double s_ok = 0.0;
    const double tol = 1e-10 / std::max(std::abs(st.h), 1e-300);
    while (s_bad - s_ok > std::min(tol, 0.5)) {
      const double mid = 0.5 * (s_ok + s_bad);
      if (crossed(poly_eval(st.c, mid)) != TerminationKind::ReachedEnd)
        s_bad = mid;
      else
        s_ok = mid;
    }
    return std::make_pair(kind, s_bad);
  }

  const Rhs& rhs_;
  const IntegratorOptions& opts_;
  bool last_rejected_ = false;
};

MassProfile integrate_ivp(const Rhs& rhs, double r_start, double M0, double dM0,
                          double r_end, const IntegratorOptions& opts) {
  Dopri5 solver(rhs, opts);
  return solver.run(r_start, M0, dM0, r_end);
}

}  // namespace dyonmap
