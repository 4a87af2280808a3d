#include "hopfchar/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hopfchar {

Rational rational_from_string(const std::string& s) {
    std::string t = s;
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    try {
        return Rational(t);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
}

std::string rational_to_string(const Rational& r) { return r.str(); }

Rational rational_pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::invalid_argument("0 has no negative power");
        return Rational(1) / rational_pow(base, -exp);
    }
    Rational acc(1), b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

bool rational_is_integer(const Rational& r) { return denominator(r) == 1; }

std::string AlgebraDescriptor::label() const {
    switch (kind) {
        case AlgebraKind::rational: return "rational";
        case AlgebraKind::float64: return "float64";
        case AlgebraKind::truncated_poly:
            return "truncated-poly/" + std::to_string(poly_order);
    }
    return "?";
}

Scalar Scalar::zero(const AlgebraDescriptor& d) {
    switch (d.kind) {
        case AlgebraKind::rational: return Scalar(Rational(0));
        case AlgebraKind::float64: return Scalar(0.0);
        case AlgebraKind::truncated_poly:
            return Scalar(TruncPoly{std::vector<Rational>(d.poly_order, Rational(0))});
    }
    throw std::logic_error("bad kind");
}

Scalar Scalar::one(const AlgebraDescriptor& d) {
    switch (d.kind) {
        case AlgebraKind::rational: return Scalar(Rational(1));
        case AlgebraKind::float64: return Scalar(1.0);
        case AlgebraKind::truncated_poly: {
            std::vector<Rational> c(d.poly_order, Rational(0));
            c[0] = 1;
            return Scalar(TruncPoly{std::move(c)});
        }
    }
    throw std::logic_error("bad kind");
}

Scalar Scalar::of_poly(std::vector<Rational> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("truncated-poly needs >= 1 coefficient");
    return Scalar(TruncPoly{std::move(coeffs)});
}

AlgebraKind Scalar::kind() const {
    if (std::holds_alternative<Rational>(value_)) return AlgebraKind::rational;
    if (std::holds_alternative<double>(value_)) return AlgebraKind::float64;
    return AlgebraKind::truncated_poly;
}

AlgebraDescriptor Scalar::descriptor() const {
    AlgebraDescriptor d;
    d.kind = kind();
    if (d.kind == AlgebraKind::truncated_poly)
        d.poly_order = static_cast<int>(std::get<TruncPoly>(value_).c.size());
    return d;
}

const Rational& Scalar::rat() const {
    if (kind() != AlgebraKind::rational) throw std::invalid_argument("not a rational scalar");
    return std::get<Rational>(value_);
}

double Scalar::f64() const {
    if (kind() != AlgebraKind::float64) throw std::invalid_argument("not a float64 scalar");
    return std::get<double>(value_);
}

const std::vector<Rational>& Scalar::coeffs() const {
    if (kind() != AlgebraKind::truncated_poly)
        throw std::invalid_argument("not a truncated-poly scalar");
    return std::get<TruncPoly>(value_).c;
}

namespace {

[[noreturn]] void mismatch(const Scalar& a, const Scalar& b) {
    throw std::invalid_argument("scalar algebra mismatch: " + a.descriptor().label() + " vs " +
                                b.descriptor().label());
}

void require_same(const Scalar& a, const Scalar& b) {
    if (!a.descriptor().same_algebra(b.descriptor())) mismatch(a, b);
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same(a, b);
    switch (a.kind()) {
        case AlgebraKind::rational: return Scalar::of_rational(a.rat() + b.rat());
        case AlgebraKind::float64: return Scalar::of_double(a.f64() + b.f64());
        case AlgebraKind::truncated_poly: {
            std::vector<Rational> c = a.coeffs();
            for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
            return Scalar::of_poly(std::move(c));
        }
    }
    throw std::logic_error("bad kind");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same(a, b);
    switch (a.kind()) {
        case AlgebraKind::rational: return Scalar::of_rational(a.rat() * b.rat());
        case AlgebraKind::float64: return Scalar::of_double(a.f64() * b.f64());
        case AlgebraKind::truncated_poly: {
            const auto& x = a.coeffs();
            const auto& y = b.coeffs();
            const size_t m = x.size();
            std::vector<Rational> c(m, Rational(0));
            for (size_t i = 0; i < m; ++i) {
                if (x[i] == 0) continue;
                for (size_t j = 0; i + j < m; ++j) c[i + j] += x[i] * y[j];
            }
            return Scalar::of_poly(std::move(c));
        }
    }
    throw std::logic_error("bad kind");
}

Scalar Scalar::operator-() const { return scaled(Rational(-1)); }

Scalar Scalar::scaled(const Rational& k) const {
    switch (kind()) {
        case AlgebraKind::rational: return of_rational(Rational(rat() * k));
        case AlgebraKind::float64: return of_double(f64() * rational_to_double(k));
        case AlgebraKind::truncated_poly: {
            std::vector<Rational> c = coeffs();
            for (auto& v : c) v *= k;
            return of_poly(std::move(c));
        }
    }
    throw std::logic_error("bad kind");
}

bool Scalar::is_zero() const {
    switch (kind()) {
        case AlgebraKind::rational: return rat() == 0;
        case AlgebraKind::float64: return f64() == 0.0;
        case AlgebraKind::truncated_poly:
            return std::all_of(coeffs().begin(), coeffs().end(),
                               [](const Rational& v) { return v == 0; });
    }
    throw std::logic_error("bad kind");
}

bool Scalar::equals(const Scalar& o) const {
    if (!descriptor().same_algebra(o.descriptor())) return false;
    switch (kind()) {
        case AlgebraKind::rational: return rat() == o.rat();
        case AlgebraKind::float64: return f64() == o.f64();
        case AlgebraKind::truncated_poly: return coeffs() == o.coeffs();
    }
    throw std::logic_error("bad kind");
}

bool Scalar::approx_equals(const Scalar& o, double tol) const {
    if (kind() == AlgebraKind::float64 && o.kind() == AlgebraKind::float64) {
        const double x = f64(), y = o.f64();
        return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
    }
    return equals(o);
}

std::optional<Scalar> Scalar::inverse() const {
    switch (kind()) {
        case AlgebraKind::rational: {
            if (rat() == 0) return std::nullopt;
            return of_rational(Rational(1) / rat());
        }
        case AlgebraKind::float64: {
            if (f64() == 0.0) return std::nullopt;
            return of_double(1.0 / f64());
        }
        case AlgebraKind::truncated_poly: {
            // a = a0 (1 + n) with n nilpotent; a^{-1} = a0^{-1} sum_k (-n)^k.
            const auto& c = coeffs();
            if (c[0] == 0) return std::nullopt;
            const size_t m = c.size();
            const AlgebraDescriptor d = descriptor();
            const Rational inv0 = Rational(1) / c[0];
            std::vector<Rational> n(m, Rational(0));
            for (size_t i = 1; i < m; ++i) n[i] = c[i] * inv0;
            Scalar neg_n = -of_poly(n);
            Scalar acc = one(d);
            Scalar pw = one(d);
            for (size_t k = 1; k < m; ++k) {
                pw = pw * neg_n;
                if (pw.is_zero()) break;
                acc = acc + pw;
            }
            return acc.scaled(inv0);
        }
    }
    throw std::logic_error("bad kind");
}

std::string Scalar::str() const {
    switch (kind()) {
        case AlgebraKind::rational: return rational_to_string(rat());
        case AlgebraKind::float64: {
            std::ostringstream os;
            os.precision(17);
            os << f64();
            return os.str();
        }
        case AlgebraKind::truncated_poly: {
            std::string s = "[";
            for (size_t i = 0; i < coeffs().size(); ++i) {
                if (i) s += ", ";
                s += rational_to_string(coeffs()[i]);
            }
            return s + "]";
        }
    }
    throw std::logic_error("bad kind");
}

std::optional<Rational> scalar_norm(const Scalar& a, const AlgebraDescriptor& d) {
    if (!d.same_algebra(a.descriptor()))
        throw std::invalid_argument("scalar does not belong to descriptor algebra");
    if (!d.with_norm) return std::nullopt;
    switch (a.kind()) {
        case AlgebraKind::rational: return rational_abs(a.rat());
        case AlgebraKind::float64: {
            double x = a.f64();
            return Rational(x < 0 ? -x : x);
        }
        case AlgebraKind::truncated_poly: {
            Rational mx(0);
            for (const auto& v : a.coeffs()) mx = std::max(mx, rational_abs(v));
            return Rational(a.coeffs().size()) * mx;
        }
    }
    throw std::logic_error("bad kind");
}

}  // namespace hopfchar
