#include "hopfchar/charalg.hpp"

#include <algorithm>
#include <cmath>

namespace hopfchar {

TruncatedFunctional::TruncatedFunctional(HopfPtr instance, Degree cutoff,
                                         AlgebraDescriptor algebra)
    : instance_(std::move(instance)), cutoff_(std::move(cutoff)), algebra_(algebra) {
    if (!instance_) throw std::invalid_argument("null instance");
    if (cutoff_ < 0) throw std::invalid_argument("negative cutoff");
}

Scalar TruncatedFunctional::value(const std::string& id) const {
    auto it = values_.find(id);
    if (it != values_.end()) return it->second;
    if (instance_->degree_of(id) > cutoff_)
        throw std::out_of_range("basis element '" + id + "' is beyond the cutoff");
    return Scalar::zero(algebra_);
}

void TruncatedFunctional::set(const std::string& id, Scalar v) {
    if (!v.descriptor().same_algebra(algebra_))
        throw std::invalid_argument("value algebra does not match functional algebra");
    if (instance_->degree_of(id) > cutoff_)
        throw std::out_of_range("basis element '" + id + "' is beyond the cutoff");
    if (v.is_zero())
        values_.erase(id);
    else
        values_.insert_or_assign(id, std::move(v));
}

Scalar TruncatedFunctional::eval(const LinComb& lc) const {
    Scalar acc = Scalar::zero(algebra_);
    for (const auto& [id, c] : lc) acc = acc + value(id).scaled(c);
    return acc;
}

void TruncatedFunctional::require_compatible(const TruncatedFunctional& o) const {
    if (instance_.get() != o.instance_.get())
        throw std::invalid_argument("functionals live on different instances");
    if (cutoff_ != o.cutoff_) throw std::invalid_argument("functionals have different cutoffs");
    if (!algebra_.same_algebra(o.algebra_))
        throw std::invalid_argument("functionals take values in different algebras");
}

TruncatedFunctional TruncatedFunctional::plus(const TruncatedFunctional& o) const {
    require_compatible(o);
    TruncatedFunctional out = *this;
    for (const auto& [id, v] : o.values_) out.set(id, out.value(id) + v);
    return out;
}

TruncatedFunctional TruncatedFunctional::minus(const TruncatedFunctional& o) const {
    return plus(o.scaled(Rational(-1)));
}

TruncatedFunctional TruncatedFunctional::scaled(const Rational& k) const {
    TruncatedFunctional out(instance_, cutoff_, algebra_);
    if (k == 0) return out;
    for (const auto& [id, v] : values_) out.set(id, v.scaled(k));
    return out;
}

TruncatedFunctional TruncatedFunctional::scaled_by(const Scalar& k) const {
    TruncatedFunctional out(instance_, cutoff_, algebra_);
    for (const auto& [id, v] : values_) out.set(id, v * k);
    return out;
}

bool TruncatedFunctional::equals(const TruncatedFunctional& o) const {
    require_compatible(o);
    if (values_.size() != o.values_.size()) return false;
    auto it = values_.begin(), jt = o.values_.begin();
    for (; it != values_.end(); ++it, ++jt)
        if (it->first != jt->first || !it->second.equals(jt->second)) return false;
    return true;
}

bool TruncatedFunctional::approx_equals(const TruncatedFunctional& o, double tol) const {
    require_compatible(o);
    for (const auto& be : instance_->basis_up_to(cutoff_))
        if (!value(be.id).approx_equals(o.value(be.id), tol)) return false;
    return true;
}

TruncatedFunctional TruncatedFunctional::graded_piece(const Degree& d) const {
    TruncatedFunctional out(instance_, cutoff_, algebra_);
    for (const auto& [id, v] : values_)
        if (instance_->degree_of(id) == d) out.set(id, v);
    return out;
}

TruncatedFunctional TruncatedFunctional::truncated(const Degree& d) const {
    TruncatedFunctional out(instance_, cutoff_, algebra_);
    for (const auto& [id, v] : values_)
        if (instance_->degree_of(id) <= d) out.set(id, v);
    return out;
}

TruncatedFunctional convolve(const TruncatedFunctional& phi, const TruncatedFunctional& psi) {
    phi.require_compatible(psi);
    const HopfInstance& H = *phi.instance();
    TruncatedFunctional out(phi.instance(), phi.cutoff(), phi.algebra());
    for (const auto& be : H.basis_up_to(phi.cutoff())) {
        Scalar acc = Scalar::zero(phi.algebra());
        for (const auto& t : H.coproduct(be.id))
            acc = acc + (phi.value(t.left) * psi.value(t.right)).scaled(t.coeff);
        out.set(be.id, std::move(acc));
    }
    return out;
}

TruncatedFunctional unit_functional(HopfPtr instance, const Degree& cutoff,
                                    const AlgebraDescriptor& algebra) {
    TruncatedFunctional out(instance, cutoff, algebra);
    for (const auto& be : instance->basis_up_to(cutoff))
        out.set(be.id, instance->eval_counit(be.id, algebra));
    return out;
}

namespace {

// Pairs (a, b) of basis elements with deg a + deg b <= cutoff.
template <typename F>
void for_each_pair(const HopfInstance& H, const Degree& cutoff, F&& f) {
    const auto basis = H.basis_up_to(cutoff);
    for (const auto& a : basis)
        for (const auto& b : basis) {
            if (a.degree + b.degree > cutoff) continue;
            f(a, b);
        }
}

}  // namespace

bool is_character(const TruncatedFunctional& phi, double tol) {
    const HopfInstance& H = *phi.instance();
    const Scalar one = Scalar::one(phi.algebra());
    if (!phi.value(H.unit_id()).approx_equals(one, tol)) return false;
    bool ok = true;
    for_each_pair(H, phi.cutoff(), [&](const BasisElement& a, const BasisElement& b) {
        if (!ok) return;
        const Scalar lhs = phi.eval(H.product(a.id, b.id));
        const Scalar rhs = phi.value(a.id) * phi.value(b.id);
        if (!lhs.approx_equals(rhs, tol)) ok = false;
    });
    return ok;
}

bool is_infinitesimal(const TruncatedFunctional& phi, double tol) {
    const HopfInstance& H = *phi.instance();
    bool ok = true;
    for_each_pair(H, phi.cutoff(), [&](const BasisElement& a, const BasisElement& b) {
        if (!ok) return;
        const Scalar lhs = phi.eval(H.product(a.id, b.id));
        const Scalar rhs =
            phi.value(a.id).scaled(H.counit(b.id)) + phi.value(b.id).scaled(H.counit(a.id));
        if (!lhs.approx_equals(rhs, tol)) ok = false;
    });
    return ok;
}

CharacterFlag classify(const TruncatedFunctional& phi, double tol) {
    if (is_character(phi, tol)) return CharacterFlag::character;
    if (is_infinitesimal(phi, tol)) return CharacterFlag::infinitesimal;
    if (unit_inverse(phi)) return CharacterFlag::unit_group_element;
    return CharacterFlag::general;
}

std::string to_string(CharacterFlag flag) {
    switch (flag) {
        case CharacterFlag::character: return "character";
        case CharacterFlag::infinitesimal: return "infinitesimal";
        case CharacterFlag::unit_group_element: return "unit-group element";
        case CharacterFlag::general: return "general";
    }
    return "?";
}

TruncatedFunctional char_inverse(const TruncatedFunctional& phi) {
    if (!is_character(phi))
        throw std::invalid_argument("char_inverse: input is not a character");
    const HopfInstance& H = *phi.instance();
    TruncatedFunctional out(phi.instance(), phi.cutoff(), phi.algebra());
    for (const auto& be : H.basis_up_to(phi.cutoff())) out.set(be.id, phi.eval(H.antipode(be.id)));
    return out;
}

namespace {

// Gaussian elimination over B for the degreewise blocks of unit_inverse.
// Returns nullopt when no pivot of the current column is invertible.
std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> M,
                                                std::vector<Scalar> rhs,
                                                const AlgebraDescriptor& alg) {
    const size_t n = rhs.size();
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;

    for (size_t col = 0; col < n; ++col) {
        // Pick an invertible pivot; for float64 prefer the largest magnitude.
        size_t pivot = n;
        double best = -1.0;
        for (size_t r = col; r < n; ++r) {
            const Scalar& cand = M[r][col];
            if (!cand.inverse()) continue;
            if (alg.kind == AlgebraKind::float64) {
                const double mag = std::abs(cand.f64());
                if (mag > best) {
                    best = mag;
                    pivot = r;
                }
            } else {
                pivot = r;
                break;
            }
        }
        if (pivot == n) return std::nullopt;
        std::swap(M[col], M[pivot]);
        std::swap(rhs[col], rhs[pivot]);

        const Scalar inv = *M[col][col].inverse();
        for (size_t c = col; c < n; ++c) M[col][c] = M[col][c] * inv;
        rhs[col] = rhs[col] * inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col].is_zero()) continue;
            const Scalar factor = M[r][col];
            for (size_t c = col; c < n; ++c) M[r][c] = M[r][c] - factor * M[col][c];
            rhs[r] = rhs[r] - factor * rhs[col];
        }
    }
    return rhs;
}

}  // namespace

std::optional<TruncatedFunctional> unit_inverse(const TruncatedFunctional& phi) {
    const HopfInstance& H = *phi.instance();
    const AlgebraDescriptor& alg = phi.algebra();
    TruncatedFunctional psi(phi.instance(), phi.cutoff(), alg);

    // (phi * psi)(h) = eps(h) 1_B, solved degree by degree. For deg h = d the
    // unknowns psi(g), deg g = d, enter through terms with a degree-0 left
    // leg; everything of lower degree is already known.
    for (const Degree& d : H.degrees_up_to(phi.cutoff())) {
        auto ids = H.basis_of_degree(d);
        std::sort(ids.begin(), ids.end());
        const size_t n = ids.size();
        std::map<std::string, size_t> index;
        for (size_t i = 0; i < n; ++i) index.emplace(ids[i], i);

        std::vector<std::vector<Scalar>> M(n, std::vector<Scalar>(n, Scalar::zero(alg)));
        std::vector<Scalar> rhs(n, Scalar::zero(alg));
        for (size_t i = 0; i < n; ++i) {
            rhs[i] = Scalar::one(alg).scaled(H.counit(ids[i]));
            for (const auto& t : H.coproduct(ids[i])) {
                const Degree rd = H.degree_of(t.right);
                if (rd == d) {
                    M[i][index.at(t.right)] =
                        M[i][index.at(t.right)] + phi.value(t.left).scaled(t.coeff);
                } else {
                    rhs[i] = rhs[i] - (phi.value(t.left) * psi.value(t.right)).scaled(t.coeff);
                }
            }
        }
        auto sol = solve_linear(std::move(M), std::move(rhs), alg);
        if (!sol) return std::nullopt;
        for (size_t i = 0; i < n; ++i) psi.set(ids[i], std::move((*sol)[i]));
    }
    return psi;
}

namespace {

// Smallest positive realized degree; bounds the exp/log series length.
Degree min_positive_degree(const HopfInstance& H, const Degree& cutoff) {
    for (const Degree& d : H.degrees_up_to(cutoff))
        if (d > 0) return d;
    return cutoff + 1;  // only degree 0 realized: series has one term
}

void require_vanishing_degree_zero(const TruncatedFunctional& phi, const char* who) {
    for (const auto& id : phi.instance()->basis_of_degree(Degree(0)))
        if (!phi.value(id).is_zero())
            throw std::invalid_argument(std::string(who) +
                                        ": functional must vanish on the degree-0 part");
}

}  // namespace

TruncatedFunctional exp_star(const TruncatedFunctional& phi) {
    require_vanishing_degree_zero(phi, "exp_star");
    const Degree dmin = min_positive_degree(*phi.instance(), phi.cutoff());
    TruncatedFunctional acc = unit_functional(phi.instance(), phi.cutoff(), phi.algebra());
    TruncatedFunctional term = phi;  // phi^{*n} / n!
    long n = 1;
    while (!term.entries().empty()) {
        acc = acc.plus(term);
        ++n;
        if (Degree(n) * dmin > phi.cutoff()) break;  // phi^{*n} vanishes below cutoff
        term = convolve(term, phi).scaled(Rational(1, n));
    }
    return acc;
}

TruncatedFunctional log_star(const TruncatedFunctional& psi) {
    const TruncatedFunctional unit =
        unit_functional(psi.instance(), psi.cutoff(), psi.algebra());
    const TruncatedFunctional x = psi.minus(unit);
    require_vanishing_degree_zero(x, "log_star");
    const Degree dmin = min_positive_degree(*psi.instance(), psi.cutoff());
    TruncatedFunctional acc(psi.instance(), psi.cutoff(), psi.algebra());
    TruncatedFunctional power = x;  // x^{*n}
    long n = 1;
    while (!power.entries().empty()) {
        acc = acc.plus(power.scaled(Rational((n % 2 == 1) ? 1 : -1, n)));
        ++n;
        if (Degree(n) * dmin > psi.cutoff()) break;
        power = convolve(power, x);
    }
    return acc;
}

TruncatedFunctional bracket(const TruncatedFunctional& phi, const TruncatedFunctional& psi) {
    return convolve(phi, psi).minus(convolve(psi, phi));
}

TruncatedFunctional bch(const TruncatedFunctional& x, const TruncatedFunctional& y) {
    if (!is_infinitesimal(x) || !is_infinitesimal(y))
        throw std::invalid_argument("bch: inputs must be infinitesimal characters");
    return log_star(convolve(exp_star(x), exp_star(y)));
}

}  // namespace hopfchar
