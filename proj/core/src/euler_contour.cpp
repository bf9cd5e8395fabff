// Copyright 2026 The lorentz-harmonics Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include "lh/errors.hpp"
#include "lh/special/compensated_sum.hpp"
#include "lh/special/gamma.hpp"
#include "lh/special/hypergeometric.hpp"

namespace lh::detail {

namespace {

using cplx = std::complex<double>;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kSamplesPerSegment = 48;
constexpr int kInitialPieces = 8;
constexpr int kMaxIntervals = 6000;

// Log of the integrand t^p (1-t)^q (1-zt)^{-a}.
struct Exponent {
  double p;
  double q;
  cplx a;
  double z;

  cplx operator()(cplx t) const {
    cplx v = -a * std::log(1.0 - z * t);
    if (p != 0.0) v += p * std::log(t);
    if (q != 0.0) v += q * std::log(1.0 - t);
    return v;
  }
  cplx second_derivative(cplx t) const {
    const cplx u = 1.0 - z * t;
    return -p / (t * t) - q / ((1.0 - t) * (1.0 - t)) + a * z * z / (u * u);
  }
};

using Path = std::vector<cplx>;

double real_peak(const Exponent& phi, const Path& path) {
  double peak = -kInf;
  for (size_t k = 0; k + 1 < path.size(); ++k) {
    const cplx v0 = path[k];
    const cplx v1 = path[k + 1];
    for (int i = 0; i <= kSamplesPerSegment; ++i) {
      if ((k == 0 && i == 0) || (k + 2 == path.size() && i == kSamplesPerSegment)) continue;
      const double u = static_cast<double>(i) / kSamplesPerSegment;
      const double re = phi(v0 + u * (v1 - v0)).real();
      if (std::isfinite(re)) peak = std::max(peak, re);
    }
  }
  return peak;
}

std::vector<cplx> saddles(const Exponent& phi) {
  // p (1-t)(1-zt) - q t (1-zt) + a z t (1-t) = 0.
  const cplx qa = phi.z * (phi.p + phi.q - phi.a);
  const cplx qb = phi.a * phi.z - phi.p * (1.0 + phi.z) - phi.q;
  const cplx qc = phi.p;
  std::vector<cplx> roots;
  if (std::abs(qa) <= 1e-14 * (std::abs(qb) + std::abs(qc))) {
    if (qb != cplx(0.0, 0.0)) roots.push_back(-qc / qb);
    return roots;
  }
  const cplx disc = std::sqrt(qb * qb - 4.0 * qa * qc);
  const cplx denom = (std::real(std::conj(qb) * disc) >= 0.0) ? -(qb + disc) : -(qb - disc);
  if (denom == cplx(0.0, 0.0)) {
    roots.push_back(-qb / (2.0 * qa));
    return roots;
  }
  roots.push_back(denom / (2.0 * qa));
  roots.push_back(2.0 * qc / denom);
  return roots;
}

bool in_strip(cplx t) { return t.real() > 0.0 && t.real() < 1.0; }

std::vector<Path> candidate_paths(const Exponent& phi) {
  std::vector<Path> paths;
  paths.push_back({0.0, 1.0});
  for (cplx s : saddles(phi)) {
    if (!in_strip(s) || !std::isfinite(s.real()) || !std::isfinite(s.imag())) continue;
    if (std::abs(s.imag()) < 1e-12) continue;  // on the real segment already
    paths.push_back({0.0, s, 1.0});
    const cplx d2 = phi.second_derivative(s);
    if (!(std::abs(d2) > 0.0)) continue;
    cplx dir = std::polar(1.0, 0.5 * (std::numbers::pi - std::arg(d2)));
    if (dir.real() < 0.0) dir = -dir;
    const double h = std::min(4.0 / std::sqrt(std::abs(d2)),
                              0.45 * std::min(std::abs(s), std::abs(1.0 - s)));
    const cplx lo = s - h * dir;
    const cplx hi = s + h * dir;
    if (in_strip(lo) && in_strip(hi)) paths.push_back({0.0, lo, hi, 1.0});
  }
  return paths;
}

struct Interval {
  int segment;
  double u0;
  double u1;
  cplx value;
  double error;
  double l1;
  bool operator<(const Interval& o) const { return error < o.error; }
};

class ScaledIntegrator {
 public:
  ScaledIntegrator(const Exponent& phi, const Path& path, double shift)
      : phi_(phi), path_(path), shift_(shift) {}

  Interval integrate(int segment, double u0, double u1) {
    const cplx v0 = path_[segment];
    const cplx dv = path_[segment + 1] - v0;
    const double center = 0.5 * (u0 + u1);
    const double half = 0.5 * (u1 - u0);
    cplx fk[15];
    for (int i = 0; i < 7; ++i) {
      fk[2 * i] = eval(v0 + (center - half * kXgk[i]) * dv);
      fk[2 * i + 1] = eval(v0 + (center + half * kXgk[i]) * dv);
    }
    fk[14] = eval(v0 + center * dv);
    cplx kron = kWgk[7] * fk[14];
    cplx gauss = kWg[3] * fk[14];
    double l1 = kWgk[7] * std::abs(fk[14]);
    for (int i = 0; i < 7; ++i) {
      const cplx pair = fk[2 * i] + fk[2 * i + 1];
      kron += kWgk[i] * pair;
      l1 += kWgk[i] * (std::abs(fk[2 * i]) + std::abs(fk[2 * i + 1]));
      if (i % 2 == 1) gauss += kWg[i / 2] * pair;
    }
    const double jac = half * std::abs(dv);
    const cplx factor = half * dv;
    Interval out{segment, u0, u1, kron * factor, 0.0, l1 * jac};
    // QUADPACK-style scaling of the Gauss/Kronrod difference.
    const cplx mean = 0.5 * kron;
    double resasc = kWgk[7] * std::abs(fk[14] - mean);
    for (int i = 0; i < 7; ++i) {
      resasc += kWgk[i] * (std::abs(fk[2 * i] - mean) + std::abs(fk[2 * i + 1] - mean));
    }
    resasc *= jac;
    double err = std::abs((kron - gauss) * factor);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    out.error = err;
    return out;
  }

  int evaluations() const { return evaluations_; }
  double max_excess() const { return max_excess_; }

 private:
  cplx eval(cplx t) {
    ++evaluations_;
    const cplx e = phi_(t) - shift_;
    if (!std::isfinite(e.real())) return 0.0;
    max_excess_ = std::max(max_excess_, e.real());
    return std::exp(e);
  }

  const Exponent& phi_;
  const Path& path_;
  double shift_;
  int evaluations_ = 0;
  double max_excess_ = -kInf;
};

struct PathIntegral {
  cplx value;
  double error;
  double l1;
  int evaluations;
  double max_excess;
};

PathIntegral integrate_path(const Exponent& phi, const Path& path, double shift) {
  ScaledIntegrator integ(phi, path, shift);
  std::priority_queue<Interval> queue;
  const int segments = static_cast<int>(path.size()) - 1;
  for (int s = 0; s < segments; ++s) {
    for (int k = 0; k < kInitialPieces; ++k) {
      queue.push(integ.integrate(s, static_cast<double>(k) / kInitialPieces,
                                 static_cast<double>(k + 1) / kInitialPieces));
    }
  }
  auto totals = [&]() {
    ComplexNeumaierSum sum;
    double err = 0.0;
    double l1 = 0.0;
    auto copy = queue;
    while (!copy.empty()) {
      sum.add(copy.top().value);
      err += copy.top().error;
      l1 += copy.top().l1;
      copy.pop();
    }
    return PathIntegral{sum.value(), err, l1, integ.evaluations(), integ.max_excess()};
  };
  PathIntegral current = totals();
  int splits = 0;
  while (static_cast<int>(queue.size()) < kMaxIntervals) {
    const double floor = 50.0 * kEps * current.l1;
    if (current.error <= std::max(1e-14 * std::abs(current.value), floor)) break;
    const Interval worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.u0 + worst.u1);
    if (mid <= worst.u0 || mid >= worst.u1) {
      queue.push(worst);
      break;
    }
    const Interval left = integ.integrate(worst.segment, worst.u0, mid);
    const Interval right = integ.integrate(worst.segment, mid, worst.u1);
    queue.push(left);
    queue.push(right);
    if (++splits % 64 == 0) {
      current = totals();
    } else {
      current.value += left.value + right.value - worst.value;
      current.error += left.error + right.error - worst.error;
      current.l1 += left.l1 + right.l1 - worst.l1;
    }
  }
  return totals();
}

}  // namespace

ContourOutcome euler_contour(cplx a, double b, double c, double z) {
  if (!(b > 0.0 && c > b)) throw DomainError("euler_contour: requires c > b > 0");
  if (!(z < 1.0)) throw DomainError("euler_contour: requires z < 1");
  const Exponent phi{b - 1.0, c - b - 1.0, a, z};

  Path best_path;
  double best_peak = kInf;
  for (const Path& path : candidate_paths(phi)) {
    const double peak = real_peak(phi, path);
    if (peak < best_peak - 1e-12) {
      best_peak = peak;
      best_path = path;
    }
  }
  if (best_path.empty() || !std::isfinite(best_peak)) {
    throw NumericalError("euler_contour: integrand not finite on any path");
  }

  double shift = best_peak;
  PathIntegral result{};
  int evaluations = 0;
  for (int attempt = 0; attempt < 3; ++attempt) {
    result = integrate_path(phi, best_path, shift);
    evaluations += result.evaluations;
    if (result.max_excess < 600.0) break;
    shift += result.max_excess;
  }

  ContourOutcome out;
  out.evaluations = evaluations;
  const double mag = std::abs(result.value);
  if (mag == 0.0 || !std::isfinite(mag)) {
    out.error_estimate = kInf;
    return out;
  }
  const cplx log_pref = log_gamma(c) - log_gamma(b) - log_gamma(c - b);
  out.value = LogComplexValue::from_complex(result.value) *
              LogComplexValue::from_log(log_pref + cplx(shift, 0.0));
  const double rounding = 4.0 * kEps * (std::abs(log_pref) + std::abs(shift));
  out.error_estimate = (result.error + 50.0 * kEps * result.l1) / mag + rounding;
  return out;
}

}  // namespace lh::detail
