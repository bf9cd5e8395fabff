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

#include "lh/special/hypergeometric.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lh/errors.hpp"
#include "lh/special/compensated_sum.hpp"
#include "lh/special/gamma.hpp"

namespace lh {

namespace {

using cplx = std::complex<double>;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDegeneracyShift = 1e-9;

Hyp2F1Result from_series(const detail::SeriesOutcome& s, Hyp2F1Method method,
                         const LogComplexValue& prefactor) {
  Hyp2F1Result r;
  r.value = prefactor * s.value;
  r.method = method;
  r.terms = s.terms;
  r.error_estimate = s.converged ? s.error_estimate : kInf;
  return r;
}

// Relative error that a log-space prefactor built from the given logs carries.
double log_rounding(std::initializer_list<cplx> logs) {
  double total = 0.0;
  for (cplx l : logs) total += std::abs(l);
  return 4.0 * kEps * total;
}

struct ConnectionTerm {
  LogComplexValue value;
  double error = 0.0;
  int terms = 0;
  bool converged = true;
};

// Gauss 1 - x connection formula for 2F1(a, b; c; x), x in (0, 1):
//   G(c)G(s)/(G(c-a)G(c-b)) F(a, b; 1-s; 1-x)
// + (1-x)^s G(c)G(-s)/(G(a)G(b)) F(c-a, c-b; 1+s; 1-x),   s = c - a - b.
Hyp2F1Result connection_at(cplx a, cplx b, cplx c, double x, const Hyp2F1Options& opt) {
  const cplx s = c - a - b;
  const double y = 1.0 - x;
  const cplx log_gc = log_gamma(c);
  const cplx log_gs = log_gamma(s);
  const cplx log_gms = log_gamma(-s);

  ConnectionTerm t1;
  const LogComplexValue r1 = reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
  if (!r1.is_zero()) {
    auto series = detail::gauss_series(a, b, 1.0 - s, y, opt.max_terms, opt.tail_tolerance);
    t1.value = LogComplexValue::from_log(log_gc + log_gs) * r1 * series.value;
    t1.error = series.error_estimate + log_rounding({log_gc, log_gs, r1.log()});
    t1.terms = series.terms;
    t1.converged = series.converged;
  }
  ConnectionTerm t2;
  const LogComplexValue r2 = reciprocal_gamma(a) * reciprocal_gamma(b);
  if (!r2.is_zero()) {
    auto series = detail::gauss_series(c - a, c - b, 1.0 + s, y, opt.max_terms, opt.tail_tolerance);
    const cplx log_pow = s * std::log(y);
    t2.value = LogComplexValue::from_log(log_pow + log_gc + log_gms) * r2 * series.value;
    t2.error = series.error_estimate + log_rounding({log_pow, log_gc, log_gms, r2.log()});
    t2.terms = series.terms;
    t2.converged = series.converged;
  }

  Hyp2F1Result r;
  r.method = Hyp2F1Method::kConnection;
  r.value = t1.value + t2.value;
  r.terms = t1.terms + t2.terms;
  if (!t1.converged || !t2.converged || r.value.is_zero()) {
    r.error_estimate = kInf;
    return r;
  }
  const double w1 = t1.value.is_zero() ? 0.0 : std::exp(t1.value.log_mag() - r.value.log_mag());
  const double w2 = t2.value.is_zero() ? 0.0 : std::exp(t2.value.log_mag() - r.value.log_mag());
  r.error_estimate = w1 * (t1.error + kEps) + w2 * (t2.error + kEps);
  return r;
}

double distance_to_integer(cplx s) {
  return std::abs(s - std::round(s.real()));
}

// Connection formula; when c - a - b is an integer the formula is singular
// and a is nudged off the degeneracy. The nudge is repeated at twice the size
// and the spread enters the error estimate.
Hyp2F1Result connection(cplx a, cplx b, cplx c, double x, const Hyp2F1Options& opt) {
  const cplx s = c - a - b;
  if (distance_to_integer(s) >= kDegeneracyShift) return connection_at(a, b, c, x, opt);
  const double sign = s.imag() >= 0.0 ? 1.0 : -1.0;
  const cplx shift(0.0, sign * kDegeneracyShift);
  Hyp2F1Result r1 = connection_at(a - shift, b, c, x, opt);
  Hyp2F1Result r2 = connection_at(a - 2.0 * shift, b, c, x, opt);
  if (r1.value.is_zero() || !std::isfinite(r1.error_estimate)) {
    r1.error_estimate = kInf;
    return r1;
  }
  const LogComplexValue diff = r1.value - r2.value;
  const double spread = diff.is_zero() ? 0.0 : std::exp(diff.log_mag() - r1.value.log_mag());
  r1.error_estimate += spread + r2.error_estimate;
  r1.terms += r2.terms;
  return r1;
}

Hyp2F1Result direct(cplx a, cplx b, cplx c, double x, Hyp2F1Method method,
                    const LogComplexValue& prefactor, const Hyp2F1Options& opt) {
  return from_series(detail::gauss_series(a, b, c, x, opt.max_terms, opt.tail_tolerance), method,
                     prefactor);
}

bool is_real(cplx v) { return v.imag() == 0.0; }

// Euler integral needs one real parameter B with C > B > 0.
bool try_contour(cplx a, cplx b, cplx c, double x, const LogComplexValue& prefactor,
                 double prefactor_error, Hyp2F1Result& out) {
  if (!is_real(c)) return false;
  if (!(is_real(b) && b.real() > 0.0 && c.real() > b.real())) {
    if (is_real(a) && a.real() > 0.0 && c.real() > a.real()) {
      std::swap(a, b);
    } else {
      return false;
    }
  }
  auto res = detail::euler_contour(a, b.real(), c.real(), x);
  out.value = prefactor * res.value;
  out.method = Hyp2F1Method::kContour;
  out.terms = res.evaluations;
  out.error_estimate = res.value.is_zero() ? kInf : res.error_estimate + prefactor_error;
  return true;
}

void validate(const Hyp2F1Params& p) {
  if (!std::isfinite(p.z)) throw DomainError("hyp2f1: non-finite argument");
  if (p.z >= 1.0) throw DomainError("hyp2f1: argument z >= 1 is outside the supported domain");
  if (is_nonpositive_integer(p.c)) throw DomainError("hyp2f1: c is a non-positive integer");
  for (cplx v : {p.a, p.b, p.c}) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("hyp2f1: non-finite parameter");
    }
  }
}

}  // namespace

std::string_view to_string(Hyp2F1Method method) {
  switch (method) {
    case Hyp2F1Method::kTrivial: return "trivial";
    case Hyp2F1Method::kDirect: return "direct";
    case Hyp2F1Method::kPfaffDirect: return "pfaff_direct";
    case Hyp2F1Method::kConnection: return "connection";
    case Hyp2F1Method::kMappedSeries: return "mapped_series";
    case Hyp2F1Method::kContour: return "contour";
  }
  return "unknown";
}

namespace detail {

SeriesOutcome gauss_series(cplx a, cplx b, cplx c, double x, int max_terms,
                           double tail_tolerance) {
  constexpr double kRescaleAt = 1e250;
  const double log_rescale = std::log(kRescaleAt);
  SeriesOutcome out;
  ComplexNeumaierSum sum;
  sum.add(1.0);
  cplx term = 1.0;
  double l1 = 1.0;
  double log_scale = 0.0;
  int n = 0;
  for (; n < max_terms; ++n) {
    const double dn = static_cast<double>(n);
    const cplx num = (a + dn) * (b + dn);
    if (num == cplx(0.0, 0.0)) {
      out.converged = true;
      break;
    }
    const cplx ratio = num / ((c + dn) * (dn + 1.0)) * x;
    term *= ratio;
    sum.add(term);
    const double mag = std::abs(term);
    l1 += mag;
    if (mag > kRescaleAt) {
      term /= kRescaleAt;
      sum.scale(1.0 / kRescaleAt);
      l1 /= kRescaleAt;
      log_scale += log_rescale;
    }
    const double rho = std::max(std::abs(ratio), std::abs(x));
    if (rho < 1.0) {
      const double tail = std::abs(term) * rho / (1.0 - rho);
      if (tail <= tail_tolerance * std::abs(sum.value())) {
        out.converged = true;
        ++n;
        break;
      }
    }
  }
  const cplx total = sum.value();
  out.terms = n;
  out.value = LogComplexValue::from_complex(total) * LogComplexValue(log_scale, 0.0);
  const double abs_total = std::abs(total);
  const double kappa = abs_total > 0.0 ? l1 / abs_total : kInf;
  out.error_estimate = kEps * kappa * (4.0 + std::sqrt(static_cast<double>(n))) + tail_tolerance;
  return out;
}

}  // namespace detail

Hyp2F1Result hyp2f1_detailed(const Hyp2F1Params& p, const Hyp2F1Options& opt) {
  validate(p);
  const cplx a = p.a;
  const cplx b = p.b;
  const cplx c = p.c;
  const double z = p.z;
  if (z == 0.0) return {LogComplexValue::one(), Hyp2F1Method::kTrivial, 0, 0.0};

  Hyp2F1Result best;
  best.error_estimate = kInf;
  auto consider = [&](const Hyp2F1Result& r) {
    if (r.error_estimate < best.error_estimate) best = r;
    return best.error_estimate <= opt.target_error;
  };

  // Terminating series are finite sums at any argument.
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
    if (consider(direct(a, b, c, z, Hyp2F1Method::kDirect, LogComplexValue::one(), opt))) {
      return best;
    }
  }

  if (z < 0.0) {
    const double w = z / (z - 1.0);
    const double log1mz = std::log1p(-z);
    const LogComplexValue pre_b = LogComplexValue::from_log(-b * log1mz);
    const LogComplexValue pre_a = LogComplexValue::from_log(-a * log1mz);
    const double err_b = log_rounding({b * log1mz});
    const double err_a = log_rounding({a * log1mz});
    if (w <= 0.5) {
      auto r = direct(c - a, b, c, w, Hyp2F1Method::kPfaffDirect, pre_b, opt);
      r.error_estimate += err_b;
      if (consider(r)) return best;
    } else {
      auto r = connection(c - a, b, c, w, opt);
      r.value *= pre_b;
      r.error_estimate += err_b;
      if (consider(r)) return best;
      auto m1 = direct(c - a, b, c, w, Hyp2F1Method::kMappedSeries, pre_b, opt);
      m1.error_estimate += err_b;
      if (consider(m1)) return best;
      auto m2 = direct(a, c - b, c, w, Hyp2F1Method::kMappedSeries, pre_a, opt);
      m2.error_estimate += err_a;
      if (consider(m2)) return best;
    }
    Hyp2F1Result r;
    if (try_contour(c - a, b, c, w, pre_b, err_b, r) && consider(r)) return best;
    if (try_contour(a, c - b, c, w, pre_a, err_a, r) && consider(r)) return best;
    if (try_contour(a, b, c, z, LogComplexValue::one(), 0.0, r) && consider(r)) return best;
  } else if (z <= 0.5) {
    if (consider(direct(a, b, c, z, Hyp2F1Method::kDirect, LogComplexValue::one(), opt))) {
      return best;
    }
    Hyp2F1Result r;
    if (try_contour(a, b, c, z, LogComplexValue::one(), 0.0, r) && consider(r)) return best;
  } else {
    if (consider(connection(a, b, c, z, opt))) return best;
    if (consider(direct(a, b, c, z, Hyp2F1Method::kMappedSeries, LogComplexValue::one(), opt))) {
      return best;
    }
    // Euler transformation F = (1-z)^{c-a-b} F(c-a, c-b; c; z).
    const cplx log_pre = (c - a - b) * std::log1p(-z);
    const LogComplexValue pre = LogComplexValue::from_log(log_pre);
    const double err_pre = log_rounding({log_pre});
    auto e = direct(c - a, c - b, c, z, Hyp2F1Method::kMappedSeries, pre, opt);
    e.error_estimate += err_pre;
    if (consider(e)) return best;
    Hyp2F1Result r;
    if (try_contour(a, b, c, z, LogComplexValue::one(), 0.0, r) && consider(r)) return best;
    if (try_contour(c - a, c - b, c, z, pre, err_pre, r) && consider(r)) return best;
  }

  if (!(best.error_estimate <= opt.reject_error)) {
    throw NonConvergenceError("hyp2f1: no evaluation method reached the accuracy target (best estimate " +
                              std::to_string(best.error_estimate) + ")");
  }
  return best;
}

LogComplexValue hyp2f1(const Hyp2F1Params& p, const Hyp2F1Options& options) {
  return hyp2f1_detailed(p, options).value;
}

}  // namespace lh
