#pragma once

// Closed-form model of tagger evaluation against a noisy reference corpus.
//
// Every token of the test corpus falls in one of five cells, depending on
// whether the corpus tag is right (probability 1-C), whether the tagger is
// right (t on clean tokens, u on noisy ones) and, when both are wrong,
// whether they picked the same wrong tag (p):
//
//   corpus ok,  tagger ok    (1-C) t          evaluated right
//   corpus ok,  tagger bad   (1-C)(1-t)       evaluated wrong
//   corpus bad, tagger ok    C u              evaluated wrong
//   corpus bad, tagger bad   C (1-u) p        evaluated right (same error)
//                            C (1-u)(1-p)     evaluated wrong
//
// The real accuracy x sums the tagger-ok cells; the observed accuracy K
// sums the evaluated-right cells. Only K and C are known, so the functions
// below bound x from the feasible (and "reasonable") ranges of t, u and p.
//
// All rates are fractions in [0,1].

#include <optional>

namespace noisyeval {

/// Tolerance for analytic consistency checks between K and (C, t, u, p).
inline constexpr double kConsistencyEpsilon = 1e-9;

/// Observed accuracy K of one tagger on ambiguous words together with the
/// error rate C of the reference corpus. Enforces 0 <= C < K <= 1.
class EvalObservation {
 public:
  /// Throws Error(kDomain) for values outside [0,1] and
  /// Error(kAssumptionKGreaterC) when K <= C.
  static EvalObservation create(double k_observed, double c_corpus);

  double k() const noexcept { return k_; }
  double c() const noexcept { return c_; }

 private:
  EvalObservation(double k, double c) : k_(k), c_(c) {}

  double k_;
  double c_;
};

/// Average number of admissible tags per ambiguous word occurrence (a > 1).
class AmbiguityProfile {
 public:
  static AmbiguityProfile create(double a);

  double a() const noexcept { return a_; }
  /// u of a tagger guessing uniformly among the admissible tags: 1/a.
  double random_u() const noexcept { return 1.0 / a_; }
  /// p of a tagger guessing uniformly among the wrong tags: 1/(a-1).
  double random_p() const noexcept { return 1.0 / (a_ - 1.0); }

 private:
  explicit AmbiguityProfile(double a) : a_(a) {}

  double a_;
};

struct ParameterTriple {
  double t = 0.0;  // P(tagger ok | corpus ok)
  double u = 0.0;  // P(tagger ok | corpus wrong)
  double p = 0.0;  // P(same error | both wrong)

  /// Throws Error(kDomain) unless every component is in [0,1].
  void validate() const;
  /// |K - observed_from_params(C, *this)| <= epsilon.
  bool consistent_with(const EvalObservation& obs,
                       double epsilon = kConsistencyEpsilon) const;
};

/// Closed range [lo, hi]. May be degenerate (lo == hi).
struct Range {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v, double slack = 0.0) const noexcept {
    return v >= lo - slack && v <= hi + slack;
  }
  double width() const noexcept { return hi - lo; }
  bool empty() const noexcept { return lo > hi; }
};

struct ParameterBounds {
  Range t;
  Range u;
  Range p;
};

enum class Regime { kGeneral, kReasonable };

struct PerformanceInterval {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double p_used = 0.0;
  Regime regime = Regime::kGeneral;

  Range range() const noexcept { return {x_lo, x_hi}; }
};

/// Lower floor applied to p in the reasonable regime.
enum class PFloor {
  /// p >= 1/(a-1): the tagger is at least as likely as a random guesser to
  /// repeat the corpus error. Default.
  kRandom,
  /// Only the feasibility floor max{0, (K+C-1)/C}. Lets callers evaluate
  /// p values such as 1/a that sit below the random floor.
  kFeasible,
};

/// K = (1-C) t + C (1-u) p.
double observed_from_params(double c, const ParameterTriple& params);

/// x = (1-C) t + C u.
double real_from_params(double c, const ParameterTriple& params);

/// x = K - C (1-u) p + C u, i.e. real accuracy expressed through K.
double real_from_observed(const EvalObservation& obs, double u, double p);

/// Feasible ranges for t, u and p given only K and C, each clamped to [0,1].
/// With C == 0 the corpus is clean: t collapses to [K,K] and u, p are
/// unconstrained.
ParameterBounds parameter_bounds(const EvalObservation& obs);

/// Range of x over all feasible (t, u) at a fixed p:
///   x_lo = K - C p
///   x_hi = K + C                 if K <= 1 - C
///          1 - (K + C - 1) / p   otherwise
/// Throws Error(kInfeasibleP) when p is below the feasible p floor.
PerformanceInterval real_performance_interval(const EvalObservation& obs,
                                              double p);

/// Admissible p in the reasonable regime, or nullopt when no p in [0,1]
/// qualifies (e.g. a < 2 under PFloor::kRandom).
std::optional<Range> reasonable_p_range(const EvalObservation& obs,
                                        const AmbiguityProfile& amb,
                                        PFloor floor = PFloor::kRandom);

/// Largest u still compatible with t in [0,1] at this p:
/// 1 - (K + C - 1) / (C p), capped at 1. Infinite when C == 0.
double feasible_u_max(const EvalObservation& obs, double p);

/// Largest u with u <= t when t is tied to u through K at this p:
/// (K - C p) / (1 - C - C p). Infinite when the denominator is not positive.
double u_le_t_fixpoint(const EvalObservation& obs, double p);

/// Reasonable bounds at a fixed p:
///   u in [1/a, min{1, feasible_u_max(p), u_le_t_fixpoint(p)}]
/// with t taken from parameter_bounds and p reported as the full
/// reasonable p range. Throws Error(kInfeasibleP) for p outside
/// reasonable_p_range, Error(kEmptyInterval) when 1/a exceeds the u cap.
ParameterBounds reasonable_parameter_bounds(const EvalObservation& obs,
                                            const AmbiguityProfile& amb,
                                            double p,
                                            PFloor floor = PFloor::kRandom);

/// x over the reasonable u range at a fixed p. Since x is increasing in u
/// the endpoints are x(u_lo) and x(u_hi).
PerformanceInterval reasonable_performance_interval(
    const EvalObservation& obs, const AmbiguityProfile& amb, double p,
    PFloor floor = PFloor::kRandom);

}  // namespace noisyeval
