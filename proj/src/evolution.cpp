#include "hopfchar/evolution.hpp"

#include <algorithm>
#include <cmath>

namespace hopfchar {

namespace {

Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& t) {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double poly_eval(const std::vector<Rational>& coeffs, double t) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * t + rational_to_double(*it);
    return acc;
}

// Coefficients of p(t + s).
std::vector<Rational> poly_shift(const std::vector<Rational>& coeffs, const Rational& s) {
    std::vector<Rational> out(coeffs.size(), Rational(0));
    // binomial expansion of (t + s)^k
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        Rational binom(1);
        Rational spow(1);
        // term t^j s^{k-j} * C(k, j), iterate j descending from k
        std::vector<Rational> row(k + 1, Rational(0));
        for (long j = static_cast<long>(k); j >= 0; --j) {
            row[j] = binom * spow;
            binom = binom * Rational(j) / Rational(static_cast<long>(k) - j + 1);
            spow *= s;
        }
        for (size_t j = 0; j <= k; ++j) out[j] += coeffs[k] * row[j];
    }
    return out;
}

}  // namespace

CurveSpec::CurveSpec(HopfPtr instance, Degree cutoff,
                     std::map<std::string, std::vector<Rational>> poly)
    : CurveSpec(std::move(instance), std::move(cutoff),
                std::vector<Segment>{{Rational(0), Rational(1), std::move(poly)}}) {}

CurveSpec::CurveSpec(HopfPtr instance, Degree cutoff, std::vector<Segment> segments)
    : instance_(std::move(instance)), cutoff_(std::move(cutoff)),
      segments_(std::move(segments)) {
    if (!instance_) throw std::invalid_argument("null instance");
    validate();
}

void CurveSpec::validate() const {
    if (segments_.empty()) throw std::invalid_argument("curve needs at least one segment");
    Rational t = segments_.front().t0;
    if (t != 0) throw std::invalid_argument("curve must start at t = 0");
    for (const auto& seg : segments_) {
        if (seg.t0 != t || seg.t1 <= seg.t0)
            throw std::invalid_argument("curve segments must tile [0, 1]");
        t = seg.t1;
        size_t max_deg = 0;
        for (const auto& [id, coeffs] : seg.poly) {
            if (instance_->degree_of(id) > cutoff_)
                throw std::invalid_argument("curve term '" + id + "' beyond the cutoff");
            max_deg = std::max(max_deg, coeffs.size());
        }
        // The infinitesimality defect of gamma(t) is polynomial in t of degree
        // < max_deg + 1; vanishing on max_deg + 1 distinct points proves it.
        const long grid = static_cast<long>(max_deg) + 1;
        for (long g = 0; g <= grid; ++g) {
            const Rational tg = seg.t0 + (seg.t1 - seg.t0) * Rational(g, grid + 1);
            if (!is_infinitesimal(eval_exact_in(seg, tg)))
                throw std::invalid_argument("curve is not infinitesimal at t = " +
                                            rational_to_string(tg));
        }
    }
    if (t < 1) throw std::invalid_argument("curve must cover [0, 1]");
}

const CurveSpec::Segment& CurveSpec::segment_at(const Rational& t) const {
    for (const auto& seg : segments_)
        if (t < seg.t1 || &seg == &segments_.back()) return seg;
    return segments_.back();
}

TruncatedFunctional CurveSpec::eval_exact_in(const Segment& seg, const Rational& t) const {
    TruncatedFunctional out(instance_, cutoff_, AlgebraDescriptor::rational());
    for (const auto& [id, coeffs] : seg.poly)
        out.set(id, Scalar::of_rational(poly_eval(coeffs, t)));
    return out;
}

TruncatedFunctional CurveSpec::eval_exact(const Rational& t) const {
    return eval_exact_in(segment_at(t), t);
}

TruncatedFunctional CurveSpec::eval(double t) const {
    size_t idx = segments_.size() - 1;
    for (size_t i = 0; i < segments_.size(); ++i) {
        if (t < rational_to_double(segments_[i].t1)) {
            idx = i;
            break;
        }
    }
    return eval_segment(idx, t);
}

TruncatedFunctional CurveSpec::eval_segment(size_t index, double t) const {
    const Segment& seg = segments_.at(index);
    TruncatedFunctional out(instance_, cutoff_, AlgebraDescriptor::float64());
    for (const auto& [id, coeffs] : seg.poly)
        out.set(id, Scalar::of_double(poly_eval(coeffs, t)));
    return out;
}

CurveSpec CurveSpec::shifted(const Rational& s) const {
    if (s < 0 || s >= 1) throw std::invalid_argument("shift must lie in [0, 1)");
    std::vector<Segment> out;
    for (const auto& seg : segments_) {
        if (seg.t1 <= s) continue;
        Segment ns;
        ns.t0 = std::max(Rational(seg.t0 - s), Rational(0));
        ns.t1 = seg.t1 - s;
        for (const auto& [id, coeffs] : seg.poly) ns.poly[id] = poly_shift(coeffs, s);
        out.push_back(std::move(ns));
    }
    // Extend the final segment so the shifted curve is a curve on [0, 1];
    // only [0, 1-s] is ever evaluated, and the polynomial identity behind the
    // infinitesimality check is domain-independent.
    if (!out.empty()) out.back().t1 = std::max(out.back().t1, Rational(1));
    return CurveSpec(instance_, cutoff_, std::move(out));
}

namespace {

TruncatedFunctional rhs(const TruncatedFunctional& eta, const TruncatedFunctional& gamma) {
    return convolve(eta, gamma);
}

}  // namespace

TruncatedFunctional evolve(const CurveSpec& gamma, double t1, int steps) {
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (t1 < 0.0 || t1 > 1.0) throw std::invalid_argument("t1 must lie in [0, 1]");
    const AlgebraDescriptor alg = AlgebraDescriptor::float64();
    TruncatedFunctional eta = unit_functional(gamma.instance(), gamma.cutoff(), alg);
    if (t1 == 0.0) return eta;

    // Integrate segment by segment so discontinuities coincide with step
    // boundaries; steps are allocated proportionally to segment length.
    struct Piece {
        size_t seg;
        double a, b;
        int n;
    };
    std::vector<Piece> pieces;
    for (size_t si = 0; si < gamma.segments().size(); ++si) {
        const auto& seg = gamma.segments()[si];
        const double a = rational_to_double(seg.t0);
        const double b = std::min(rational_to_double(seg.t1), t1);
        if (b <= a) continue;
        const int n = std::max(1, static_cast<int>(std::llround(steps * (b - a) / t1)));
        pieces.push_back({si, a, b, n});
        if (b >= t1) break;
    }

    for (const auto& piece : pieces) {
        const double h = (piece.b - piece.a) / piece.n;
        for (int k = 0; k < piece.n; ++k) {
            const double t = piece.a + k * h;
            const TruncatedFunctional g1 = gamma.eval_segment(piece.seg, t);
            const TruncatedFunctional g2 = gamma.eval_segment(piece.seg, t + h / 2);
            const TruncatedFunctional g3 = gamma.eval_segment(piece.seg, t + h);
            const Scalar half = Scalar::of_double(h / 2);
            const Scalar full = Scalar::of_double(h);
            const Scalar sixth = Scalar::of_double(h / 6);

            const TruncatedFunctional k1 = rhs(eta, g1);
            const TruncatedFunctional k2 = rhs(eta.plus(k1.scaled_by(half)), g2);
            const TruncatedFunctional k3 = rhs(eta.plus(k2.scaled_by(half)), g2);
            const TruncatedFunctional k4 = rhs(eta.plus(k3.scaled_by(full)), g3);

            eta = eta.plus(
                k1.plus(k2.scaled(Rational(2))).plus(k3.scaled(Rational(2))).plus(k4)
                    .scaled_by(sixth));
        }
    }
    return eta;
}

TruncatedFunctional evol_one(const CurveSpec& gamma, int steps) {
    const TruncatedFunctional full = evolve(gamma, 1.0, steps);

    // Flow property: Evol(gamma)(1) = Evol(gamma)(s) * Evol(gamma(s+.))(1-s).
    const Rational s(1, 2);
    const TruncatedFunctional head = evolve(gamma, 0.5, std::max(1, steps / 2));
    const TruncatedFunctional tail =
        evolve(gamma.shifted(s), 0.5, std::max(1, steps / 2));
    const TruncatedFunctional glued = convolve(head, tail);
    if (!full.approx_equals(glued, 1e-6))
        throw std::runtime_error("evolution flow property violated beyond tolerance");
    return full;
}

}  // namespace hopfchar
