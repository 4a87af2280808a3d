#pragma once

#include "hopfchar/charalg.hpp"

namespace hopfchar {

/// A curve [0,1] -> g(H,B) of infinitesimal characters, piecewise polynomial
/// in t with exact rational coefficients. Infinitesimality is proved at
/// construction: the defect is polynomial in t, so checking deg+1 grid points
/// per segment with exact arithmetic verifies the identity.
class CurveSpec {
  public:
    struct Segment {
        Rational t0, t1;
        // basis id -> polynomial coefficients c0 + c1 t + ...
        std::map<std::string, std::vector<Rational>> poly;
    };

    /// Single-segment curve on [0, 1].
    CurveSpec(HopfPtr instance, Degree cutoff,
              std::map<std::string, std::vector<Rational>> poly);
    CurveSpec(HopfPtr instance, Degree cutoff, std::vector<Segment> segments);

    const HopfPtr& instance() const { return instance_; }
    const Degree& cutoff() const { return cutoff_; }
    const std::vector<Segment>& segments() const { return segments_; }

    /// Exact evaluation (rational-valued functional), used for validation.
    TruncatedFunctional eval_exact(const Rational& t) const;
    /// float64-valued evaluation for the integrator.
    TruncatedFunctional eval(double t) const;
    /// Evaluation pinned to one segment's polynomial (the integrator must not
    /// read the next segment's value at a shared breakpoint).
    TruncatedFunctional eval_segment(size_t index, double t) const;

    /// The curve s + t for t in [0, 1 - s]; polynomials composed exactly.
    CurveSpec shifted(const Rational& s) const;

  private:
    void validate() const;
    const Segment& segment_at(const Rational& t) const;
    TruncatedFunctional eval_exact_in(const Segment& seg, const Rational& t) const;

    HopfPtr instance_;
    Degree cutoff_;
    std::vector<Segment> segments_;
};

/// Solve eta'(t) = eta(t) * gamma(t), eta(0) = unit, by fixed-step classical
/// RK4 on the truncated (finite-dimensional, graded-triangular) system;
/// returns eta(t1) as a float64 functional.
TruncatedFunctional evolve(const CurveSpec& gamma, double t1, int steps);

inline constexpr int kDefaultEvolveSteps = 400;

/// Evolution map at time 1. Additionally verifies the flow property
/// Evol(gamma)(1) = Evol(gamma)(s) * Evol(gamma(s+.))(1-s) numerically.
TruncatedFunctional evol_one(const CurveSpec& gamma, int steps = kDefaultEvolveSteps);

}  // namespace hopfchar
