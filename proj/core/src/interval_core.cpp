#include "noisyeval/interval_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "noisyeval/error.hpp"

namespace noisyeval {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// p values computed along different arithmetic paths (1/(a-1) vs a literal
// 2/3) may land an ulp below the floor they are meant to hit.
constexpr double kPSlack = 1e-12;

void require_fraction(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
    throw Error(ErrorCode::kDomain,
                fmt::format("{} must be a fraction in [0,1], got {}", name, v));
  }
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// max{0, (K+C-1)/C}; zero on a clean corpus.
double feasible_p_floor(const EvalObservation& obs) {
  if (obs.c() == 0.0) return 0.0;
  return std::max(0.0, (obs.k() + obs.c() - 1.0) / obs.c());
}

void require_feasible_p(const EvalObservation& obs, double p) {
  require_fraction(p, "p");
  const double floor = feasible_p_floor(obs);
  if (p < floor - kPSlack) {
    throw Error(ErrorCode::kInfeasibleP,
                fmt::format("p = {} is below the feasible minimum {} for "
                            "K = {}, C = {}",
                            p, floor, obs.k(), obs.c()));
  }
}

}  // namespace

EvalObservation EvalObservation::create(double k_observed, double c_corpus) {
  require_fraction(k_observed, "observed accuracy K");
  require_fraction(c_corpus, "corpus error rate C");
  if (!(k_observed > c_corpus)) {
    throw Error(ErrorCode::kAssumptionKGreaterC,
                fmt::format("observed accuracy K = {} must exceed corpus "
                            "error rate C = {}",
                            k_observed, c_corpus));
  }
  return EvalObservation(k_observed, c_corpus);
}

AmbiguityProfile AmbiguityProfile::create(double a) {
  if (!std::isfinite(a) || !(a > 1.0)) {
    throw Error(ErrorCode::kDomain,
                fmt::format("ambiguity ratio a must be > 1, got {}", a));
  }
  return AmbiguityProfile(a);
}

void ParameterTriple::validate() const {
  require_fraction(t, "t");
  require_fraction(u, "u");
  require_fraction(p, "p");
}

bool ParameterTriple::consistent_with(const EvalObservation& obs,
                                      double epsilon) const {
  return std::abs(obs.k() - observed_from_params(obs.c(), *this)) <= epsilon;
}

double observed_from_params(double c, const ParameterTriple& params) {
  require_fraction(c, "C");
  params.validate();
  return (1.0 - c) * params.t + c * (1.0 - params.u) * params.p;
}

double real_from_params(double c, const ParameterTriple& params) {
  require_fraction(c, "C");
  params.validate();
  return (1.0 - c) * params.t + c * params.u;
}

double real_from_observed(const EvalObservation& obs, double u, double p) {
  require_fraction(u, "u");
  require_fraction(p, "p");
  const double c = obs.c();
  return obs.k() - c * (1.0 - u) * p + c * u;
}

ParameterBounds parameter_bounds(const EvalObservation& obs) {
  const double k = obs.k();
  const double c = obs.c();
  if (c == 0.0) {
    return {.t = {k, k}, .u = {0.0, 1.0}, .p = {0.0, 1.0}};
  }
  ParameterBounds b;
  b.t = {clamp01((k - c) / (1.0 - c)), std::min(1.0, k / (1.0 - c))};
  b.u = {0.0, clamp01((1.0 - k) / c)};
  b.p = {feasible_p_floor(obs), 1.0};
  return b;
}

PerformanceInterval real_performance_interval(const EvalObservation& obs,
                                              double p) {
  require_feasible_p(obs, p);
  const double k = obs.k();
  const double c = obs.c();
  PerformanceInterval out;
  out.p_used = p;
  out.regime = Regime::kGeneral;
  out.x_lo = k - c * p;
  if (k <= 1.0 - c) {
    out.x_hi = k + c;
  } else {
    // p > 0 here: the feasible floor is positive whenever K > 1 - C.
    out.x_hi = 1.0 - (k + c - 1.0) / std::max(p, feasible_p_floor(obs));
  }
  out.x_lo = clamp01(out.x_lo);
  out.x_hi = clamp01(out.x_hi);
  return out;
}

std::optional<Range> reasonable_p_range(const EvalObservation& obs,
                                        const AmbiguityProfile& amb,
                                        PFloor floor) {
  double lo = feasible_p_floor(obs);
  if (floor == PFloor::kRandom) lo = std::max(lo, amb.random_p());
  if (lo > 1.0 + kPSlack) return std::nullopt;
  return Range{std::min(lo, 1.0), 1.0};
}

double feasible_u_max(const EvalObservation& obs, double p) {
  const double k = obs.k();
  const double c = obs.c();
  if (c == 0.0 || k + c <= 1.0) return 1.0;
  if (p <= 0.0) return -kInf;
  return std::min(1.0, 1.0 - (k + c - 1.0) / (c * p));
}

double u_le_t_fixpoint(const EvalObservation& obs, double p) {
  const double c = obs.c();
  const double denom = 1.0 - c - c * p;
  if (denom <= 0.0) return kInf;
  return (obs.k() - c * p) / denom;
}

ParameterBounds reasonable_parameter_bounds(const EvalObservation& obs,
                                            const AmbiguityProfile& amb,
                                            double p, PFloor floor) {
  require_fraction(p, "p");
  const auto p_range = reasonable_p_range(obs, amb, floor);
  if (!p_range || !p_range->contains(p, kPSlack)) {
    const std::string admissible =
        p_range ? fmt::format("[{}, {}]", p_range->lo, p_range->hi)
                : std::string("empty");
    throw Error(ErrorCode::kInfeasibleP,
                fmt::format("p = {} is outside the reasonable range {} for "
                            "K = {}, C = {}, a = {}",
                            p, admissible, obs.k(), obs.c(), amb.a()));
  }

  const double u_lo = amb.random_u();
  const double u_hi =
      std::min({1.0, feasible_u_max(obs, p), u_le_t_fixpoint(obs, p)});
  if (u_lo > u_hi) {
    throw Error(ErrorCode::kEmptyInterval,
                fmt::format("reasonable u range [{}, {}] is empty for K = {}, "
                            "C = {}, a = {}, p = {}",
                            u_lo, u_hi, obs.k(), obs.c(), amb.a(), p));
  }

  ParameterBounds b = parameter_bounds(obs);
  b.u = {u_lo, u_hi};
  b.p = *p_range;
  return b;
}

PerformanceInterval reasonable_performance_interval(
    const EvalObservation& obs, const AmbiguityProfile& amb, double p,
    PFloor floor) {
  const ParameterBounds b = reasonable_parameter_bounds(obs, amb, p, floor);
  PerformanceInterval out;
  out.p_used = p;
  out.regime = Regime::kReasonable;
  out.x_lo = clamp01(real_from_observed(obs, b.u.lo, p));
  out.x_hi = clamp01(real_from_observed(obs, b.u.hi, p));
  return out;
}

}  // namespace noisyeval
