#pragma once

#include <array>

#include "hopfchar/charalg.hpp"
#include "hopfchar/trees.hpp"

namespace hopfchar {

/// Runge-Kutta coefficients (A, b, c). Entries are exact rationals; float
/// inputs are converted to their exact dyadic value.
struct ButcherTableau {
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    std::vector<Rational> c;

    size_t stages() const { return b.size(); }
    void validate() const;
    /// Row-sum lint: warnings for c_i != sum_j A_ij (never an error).
    std::vector<std::string> lint() const;
    bool is_explicit() const;
};

/// The B-series character of a tableau: elementary weights on trees,
/// extended multiplicatively to forests. Exact over rationals.
TruncatedFunctional rk_character(HopfPtr ck, const ButcherTableau& t, const Degree& cutoff);

/// Elementary weight of a single tree.
Rational elementary_weight(const ButcherTableau& t, const Tree& tree);

/// exp_star(delta) with delta supported on the single-node tree; the
/// character of the exact flow.
TruncatedFunctional exact_flow_character(HopfPtr ck, const Degree& cutoff);

/// The delta generator itself (value 1 on the single-node tree).
TruncatedFunctional delta_functional(HopfPtr ck, const Degree& cutoff,
                                     const AlgebraDescriptor& alg);

struct OrderReport {
    int order = 0;
    bool violated = false;
    std::string first_violation_tree;  // empty when no violation up to max_order
    Rational lhs{0}, rhs{0};           // rk value / exact-flow value at the witness
};

/// Largest p <= max_order with rk(tau) = exact_flow(tau) for all |tau| <= p.
OrderReport order_of(const ButcherTableau& t, int max_order);

/// Polynomial vector field in up to 3 variables with exact coefficients.
class PolyVectorField {
  public:
    static constexpr int kMaxVars = 3;
    using Exponents = std::array<int, kMaxVars>;

    explicit PolyVectorField(int dim);

    int dim() const { return dim_; }
    void add_term(int component, Exponents exps, Rational coeff);

    std::vector<Rational> eval(const std::vector<Rational>& y) const;
    PolyVectorField partial(int var) const;

  private:
    int dim_;
    std::vector<std::map<Exponents, Rational>> comps_;
};

/// Elementary differential F(tau)(y0), by recursive differentiation of f.
std::vector<Rational> elementary_differential(const PolyVectorField& f, const Tree& tau,
                                              const std::vector<Rational>& y0);

/// Coefficients of the B-series step as a polynomial in h:
/// term[0] = y0, term[k] = sum_{|tau|=k} a(tau)/sigma(tau) F(tau)(y0).
std::vector<std::vector<Rational>> bseries_coefficients(const TruncatedFunctional& a,
                                                        const PolyVectorField& f,
                                                        const std::vector<Rational>& y0,
                                                        int cutoff);

/// y0 + sum h^{|tau|} a(tau)/sigma(tau) F(tau)(y0), exact in h.
std::vector<Rational> bseries_eval(const TruncatedFunctional& a, const PolyVectorField& f,
                                   const std::vector<Rational>& y0, const Rational& h,
                                   int cutoff);

/// Composition of integrators: step with `a`, then step with `b`.
/// Convolution with the first step on the left leg (the fall-off forests).
TruncatedFunctional compose(const TruncatedFunctional& a, const TruncatedFunctional& b);

/// Character of the same method run with step s*h: value scaled by s^degree.
/// Integer-graded instances only.
TruncatedFunctional scale_step(const TruncatedFunctional& a, const Rational& s);

}  // namespace hopfchar
