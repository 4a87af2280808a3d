#pragma once

#include "hopfchar/hopf.hpp"

namespace hopfchar {

inline constexpr double kDefaultTolerance = 1e-9;

/// A finitely supported element of Hom(H, B) at truncation: values on every
/// basis element of degree <= cutoff (missing entries are zero). Immutable in
/// use; two functionals interoperate only when instance and cutoff agree.
class TruncatedFunctional {
  public:
    TruncatedFunctional(HopfPtr instance, Degree cutoff, AlgebraDescriptor algebra);

    const HopfPtr& instance() const { return instance_; }
    const Degree& cutoff() const { return cutoff_; }
    const AlgebraDescriptor& algebra() const { return algebra_; }
    const std::map<std::string, Scalar>& entries() const { return values_; }

    Scalar value(const std::string& id) const;
    void set(const std::string& id, Scalar v);

    /// Linear extension to a K-combination of basis elements.
    Scalar eval(const LinComb& lc) const;

    TruncatedFunctional plus(const TruncatedFunctional& o) const;
    TruncatedFunctional minus(const TruncatedFunctional& o) const;
    TruncatedFunctional scaled(const Rational& k) const;
    TruncatedFunctional scaled_by(const Scalar& k) const;

    bool equals(const TruncatedFunctional& o) const;
    bool approx_equals(const TruncatedFunctional& o, double tol = kDefaultTolerance) const;

    /// Restriction to basis elements of degree exactly d (zero elsewhere).
    TruncatedFunctional graded_piece(const Degree& d) const;
    /// Restriction to degrees <= d.
    TruncatedFunctional truncated(const Degree& d) const;

    void require_compatible(const TruncatedFunctional& o) const;

  private:
    HopfPtr instance_;
    Degree cutoff_;
    AlgebraDescriptor algebra_;
    std::map<std::string, Scalar> values_;  // zeros dropped
};

/// Convolution (phi * psi)(h) = sum phi(h1) psi(h2) over Delta(h).
TruncatedFunctional convolve(const TruncatedFunctional& phi, const TruncatedFunctional& psi);

/// u_B o eps_H, the convolution unit.
TruncatedFunctional unit_functional(HopfPtr instance, const Degree& cutoff,
                                    const AlgebraDescriptor& algebra);

/// phi(ab) = phi(a)phi(b) on all pairs with deg a + deg b <= cutoff, and
/// phi(1_H) = 1_B. Exact for exact kinds, within tol for float64.
bool is_character(const TruncatedFunctional& phi, double tol = kDefaultTolerance);

enum class CharacterFlag { character, infinitesimal, unit_group_element, general };

/// The strongest certified classification of phi at its cutoff.
CharacterFlag classify(const TruncatedFunctional& phi, double tol = kDefaultTolerance);
std::string to_string(CharacterFlag flag);

/// phi(ab) = eps(b)phi(a) + eps(a)phi(b) on the same pair set.
bool is_infinitesimal(const TruncatedFunctional& phi, double tol = kDefaultTolerance);

/// phi o S; requires is_character(phi).
TruncatedFunctional char_inverse(const TruncatedFunctional& phi);

/// Two-sided star-inverse by degreewise triangular solve; nullopt when the
/// degree-0 block is singular over B.
std::optional<TruncatedFunctional> unit_inverse(const TruncatedFunctional& phi);

/// sum phi^{*n} / n!; requires phi to vanish on the degree-0 part, which makes
/// the series terminate degreewise at the truncation.
TruncatedFunctional exp_star(const TruncatedFunctional& phi);

/// sum (-1)^{n+1} (psi - unit)^{*n} / n; requires psi to agree with the unit
/// functional on the degree-0 part.
TruncatedFunctional log_star(const TruncatedFunctional& psi);

/// [phi, psi] = phi*psi - psi*phi.
TruncatedFunctional bracket(const TruncatedFunctional& phi, const TruncatedFunctional& psi);

/// log(exp x * exp y); requires x, y infinitesimal.
TruncatedFunctional bch(const TruncatedFunctional& x, const TruncatedFunctional& y);

}  // namespace hopfchar
