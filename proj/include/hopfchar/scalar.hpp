#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hopfchar {

/// Exact unbounded rational, the base field K and the default coefficient algebra.
using Rational = boost::multiprecision::cpp_rational;

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);
inline double rational_to_double(const Rational& r) { return r.convert_to<double>(); }
inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }
Rational rational_pow(const Rational& base, long exp);
bool rational_is_integer(const Rational& r);

enum class AlgebraKind { rational, float64, truncated_poly };

/// Descriptor of a registered commutative coefficient algebra B.
/// `poly_order` is the truncation order m of K[x]/(x^m); `with_norm` controls
/// whether scalar_norm is supported for this registration.
struct AlgebraDescriptor {
    AlgebraKind kind = AlgebraKind::rational;
    int poly_order = 0;
    bool with_norm = true;

    static AlgebraDescriptor rational(bool with_norm = true) {
        return {AlgebraKind::rational, 0, with_norm};
    }
    static AlgebraDescriptor float64(bool with_norm = true) {
        return {AlgebraKind::float64, 0, with_norm};
    }
    static AlgebraDescriptor truncated_poly(int order, bool with_norm = true) {
        if (order < 1) throw std::invalid_argument("truncated_poly order must be >= 1");
        return {AlgebraKind::truncated_poly, order, with_norm};
    }

    bool same_algebra(const AlgebraDescriptor& o) const {
        return kind == o.kind && poly_order == o.poly_order;
    }
    bool operator==(const AlgebraDescriptor& o) const {
        return same_algebra(o) && with_norm == o.with_norm;
    }
    std::string label() const;
};

/// An element of one of the registered coefficient algebras.
///
/// Values are immutable; arithmetic between scalars of different algebras
/// throws. Truncated-poly coefficients are exact rationals and multiplication
/// discards every coefficient of degree >= m.
class Scalar {
  public:
    struct TruncPoly {
        std::vector<Rational> c;  // size m >= 1, c[k] multiplies x^k
    };

    Scalar() : value_(Rational(0)) {}

    static Scalar zero(const AlgebraDescriptor& d);
    static Scalar one(const AlgebraDescriptor& d);
    static Scalar of_rational(Rational v) { return Scalar(std::move(v)); }
    static Scalar of_double(double v) { return Scalar(v); }
    static Scalar of_poly(std::vector<Rational> coeffs);

    AlgebraKind kind() const;
    /// Algebra of this value (norm flag defaulted; see AlgebraDescriptor::with_norm).
    AlgebraDescriptor descriptor() const;

    const Rational& rat() const;
    double f64() const;
    const std::vector<Rational>& coeffs() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar operator-() const;

    /// Multiply by a base-field constant (structure constants act through this).
    Scalar scaled(const Rational& k) const;

    bool is_zero() const;
    /// Exact equality (coefficientwise; float64 compares bitwise).
    bool equals(const Scalar& o) const;
    /// Exact for exact kinds; for float64 |a-b| <= tol*max(1,|a|,|b|).
    bool approx_equals(const Scalar& o, double tol) const;

    /// Two-sided multiplicative inverse, or nullopt when none exists.
    std::optional<Scalar> inverse() const;

    std::string str() const;

  private:
    explicit Scalar(Rational v) : value_(std::move(v)) {}
    explicit Scalar(double v) : value_(v) {}
    explicit Scalar(TruncPoly v) : value_(std::move(v)) {}

    std::variant<Rational, double, TruncPoly> value_;
};

inline std::optional<Scalar> scalar_invert(const Scalar& a) { return a.inverse(); }

/// Registered norm of `a` under descriptor `d`, exact as a rational
/// (doubles are dyadic). nullopt when the registration carries no norm.
/// rational/float64: absolute value; truncated-poly: m * max|coeff|
/// (the plain max-abs norm is not submultiplicative for m >= 2, so the
/// registered norm carries the factor m).
std::optional<Rational> scalar_norm(const Scalar& a, const AlgebraDescriptor& d);

}  // namespace hopfchar
