#include "hopfchar/bseries.hpp"

#include <algorithm>

#include "hopfchar/ck.hpp"

namespace hopfchar {

void ButcherTableau::validate() const {
    const size_t s = stages();
    if (s == 0) throw std::invalid_argument("tableau needs at least one stage");
    if (A.size() != s) throw std::invalid_argument("A must be s x s");
    for (const auto& row : A)
        if (row.size() != s) throw std::invalid_argument("A must be s x s");
    if (!c.empty() && c.size() != s) throw std::invalid_argument("c must have s entries");
}

std::vector<std::string> ButcherTableau::lint() const {
    std::vector<std::string> warnings;
    if (c.empty()) return warnings;
    for (size_t i = 0; i < stages(); ++i) {
        Rational row_sum(0);
        for (const auto& a : A[i]) row_sum += a;
        if (row_sum != c[i])
            warnings.push_back("c[" + std::to_string(i) + "] = " + rational_to_string(c[i]) +
                               " != row sum " + rational_to_string(row_sum));
    }
    return warnings;
}

bool ButcherTableau::is_explicit() const {
    for (size_t i = 0; i < stages(); ++i)
        for (size_t j = i; j < stages(); ++j)
            if (A[i][j] != 0) return false;
    return true;
}

namespace {

// Internal stage weights phi_i(tau), memoized per tree id:
// phi_i([t1..tm]) = sum_j A_ij prod_l phi_j(t_l); phi_i(leaf) = row sum.
class WeightTable {
  public:
    explicit WeightTable(const ButcherTableau& t) : t_(t) {}

    const std::vector<Rational>& stage_weights(const Tree& tree) {
        auto it = memo_.find(tree.id());
        if (it != memo_.end()) return it->second;
        const size_t s = t_.stages();
        std::vector<Rational> per_stage_products(s, Rational(1));
        for (const Tree& child : tree.children()) {
            const auto& cw = stage_weights(child);
            for (size_t j = 0; j < s; ++j) per_stage_products[j] *= cw[j];
        }
        std::vector<Rational> w(s, Rational(0));
        for (size_t i = 0; i < s; ++i)
            for (size_t j = 0; j < s; ++j) w[i] += t_.A[i][j] * per_stage_products[j];
        return memo_.emplace(tree.id(), std::move(w)).first->second;
    }

    Rational weight(const Tree& tree) {
        const size_t s = t_.stages();
        std::vector<Rational> per_stage_products(s, Rational(1));
        for (const Tree& child : tree.children()) {
            const auto& cw = stage_weights(child);
            for (size_t j = 0; j < s; ++j) per_stage_products[j] *= cw[j];
        }
        Rational acc(0);
        for (size_t i = 0; i < s; ++i) acc += t_.b[i] * per_stage_products[i];
        return acc;
    }

  private:
    const ButcherTableau& t_;
    std::map<std::string, std::vector<Rational>> memo_;
};

long degree_as_long(const Degree& d) {
    if (!rational_is_integer(d)) throw std::invalid_argument("non-integer degree");
    return numerator(d).convert_to<long>();
}

}  // namespace

Rational elementary_weight(const ButcherTableau& t, const Tree& tree) {
    t.validate();
    WeightTable wt(t);
    return wt.weight(tree);
}

TruncatedFunctional rk_character(HopfPtr ck, const ButcherTableau& t, const Degree& cutoff) {
    t.validate();
    WeightTable wt(t);
    TruncatedFunctional out(ck, cutoff, AlgebraDescriptor::rational());
    std::map<std::string, Rational> on_trees;
    for (const auto& be : ck->basis_up_to(cutoff)) {
        const Forest f = Forest::parse(be.id);
        Rational v(1);
        for (const auto& tid : f.trees()) {
            auto it = on_trees.find(tid);
            if (it == on_trees.end())
                it = on_trees.emplace(tid, wt.weight(Tree::parse(tid))).first;
            v *= it->second;
        }
        out.set(be.id, Scalar::of_rational(v));
    }
    return out;
}

TruncatedFunctional delta_functional(HopfPtr ck, const Degree& cutoff,
                                     const AlgebraDescriptor& alg) {
    TruncatedFunctional d(ck, cutoff, alg);
    if (cutoff >= 1) d.set("[]", Scalar::one(alg));
    return d;
}

TruncatedFunctional exact_flow_character(HopfPtr ck, const Degree& cutoff) {
    return exp_star(delta_functional(ck, cutoff, AlgebraDescriptor::rational()));
}

OrderReport order_of(const ButcherTableau& t, int max_order) {
    if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
    HopfPtr ck = std::make_shared<CkInstance>();
    const TruncatedFunctional a = rk_character(ck, t, Degree(max_order));
    const TruncatedFunctional e = exact_flow_character(ck, Degree(max_order));

    OrderReport rep;
    rep.order = max_order;
    for (const Tree& tree : gen_trees(max_order)) {
        const Scalar lhs = a.value(tree.id());
        const Scalar rhs = e.value(tree.id());
        if (!lhs.equals(rhs)) {
            rep.order = tree.order() - 1;
            rep.violated = true;
            rep.first_violation_tree = tree.id();
            rep.lhs = lhs.rat();
            rep.rhs = rhs.rat();
            break;
        }
    }
    return rep;
}

PolyVectorField::PolyVectorField(int dim) : dim_(dim), comps_(dim) {
    if (dim < 1 || dim > kMaxVars)
        throw std::invalid_argument("vector field dimension must be in [1, 3]");
}

void PolyVectorField::add_term(int component, Exponents exps, Rational coeff) {
    if (component < 0 || component >= dim_) throw std::invalid_argument("bad component");
    for (int v = 0; v < kMaxVars; ++v) {
        if (exps[v] < 0) throw std::invalid_argument("negative exponent");
        if (v >= dim_ && exps[v] != 0)
            throw std::invalid_argument("exponent on a variable beyond the dimension");
    }
    if (coeff == 0) return;
    auto& m = comps_[component];
    m[exps] += coeff;
    if (m[exps] == 0) m.erase(exps);
}

std::vector<Rational> PolyVectorField::eval(const std::vector<Rational>& y) const {
    if (static_cast<int>(y.size()) != dim_) throw std::invalid_argument("point dimension");
    std::vector<Rational> out(dim_, Rational(0));
    for (int a = 0; a < dim_; ++a) {
        for (const auto& [exps, c] : comps_[a]) {
            Rational term = c;
            for (int v = 0; v < dim_; ++v) term *= rational_pow(y[v], exps[v]);
            out[a] += term;
        }
    }
    return out;
}

PolyVectorField PolyVectorField::partial(int var) const {
    if (var < 0 || var >= dim_) throw std::invalid_argument("bad variable");
    PolyVectorField out(dim_);
    for (int a = 0; a < dim_; ++a) {
        for (const auto& [exps, c] : comps_[a]) {
            if (exps[var] == 0) continue;
            Exponents e = exps;
            e[var] -= 1;
            out.add_term(a, e, c * Rational(exps[var]));
        }
    }
    return out;
}

std::vector<Rational> elementary_differential(const PolyVectorField& f, const Tree& tau,
                                              const std::vector<Rational>& y0) {
    const int d = f.dim();
    std::map<std::string, std::vector<Rational>> memo;

    auto rec = [&](auto&& self, const Tree& t) -> const std::vector<Rational>& {
        auto it = memo.find(t.id());
        if (it != memo.end()) return it->second;

        const int m = static_cast<int>(t.children().size());
        std::vector<const std::vector<Rational>*> childs;
        for (const Tree& c : t.children()) childs.push_back(&self(self, c));

        std::vector<Rational> out(d, Rational(0));
        // Iterate multi-indices (i1..im) in [0,d)^m and contract with the
        // m-th derivative of each component.
        std::vector<int> idx(m, 0);
        while (true) {
            PolyVectorField g = f;
            for (int l = 0; l < m; ++l) g = g.partial(idx[l]);
            const std::vector<Rational> gv = g.eval(y0);
            Rational weight(1);
            for (int l = 0; l < m; ++l) weight *= (*childs[l])[idx[l]];
            if (weight != 0)
                for (int a = 0; a < d; ++a) out[a] += gv[a] * weight;
            int pos = m - 1;
            while (pos >= 0 && ++idx[pos] == d) idx[pos--] = 0;
            if (pos < 0) break;
        }
        return memo.emplace(t.id(), std::move(out)).first->second;
    };
    return rec(rec, tau);
}

std::vector<std::vector<Rational>> bseries_coefficients(const TruncatedFunctional& a,
                                                        const PolyVectorField& f,
                                                        const std::vector<Rational>& y0,
                                                        int cutoff) {
    if (a.instance()->name() != "ck")
        throw std::invalid_argument("bseries needs a functional on the rooted-tree instance");
    if (Degree(cutoff) > a.cutoff())
        throw std::invalid_argument("bseries cutoff beyond the functional cutoff");
    if (static_cast<int>(y0.size()) != f.dim()) throw std::invalid_argument("y0 dimension");

    std::vector<std::vector<Rational>> terms(cutoff + 1,
                                             std::vector<Rational>(f.dim(), Rational(0)));
    terms[0] = y0;
    for (const Tree& tree : gen_trees(cutoff)) {
        const Scalar av = a.value(tree.id());
        if (av.is_zero()) continue;
        const Rational w = av.rat() / tree_sigma(tree);
        const std::vector<Rational> F = elementary_differential(f, tree, y0);
        for (int i = 0; i < f.dim(); ++i) terms[tree.order()][i] += w * F[i];
    }
    return terms;
}

std::vector<Rational> bseries_eval(const TruncatedFunctional& a, const PolyVectorField& f,
                                   const std::vector<Rational>& y0, const Rational& h,
                                   int cutoff) {
    const auto terms = bseries_coefficients(a, f, y0, cutoff);
    std::vector<Rational> out(f.dim(), Rational(0));
    Rational hk(1);
    for (int k = 0; k <= cutoff; ++k) {
        for (int i = 0; i < f.dim(); ++i) out[i] += hk * terms[k][i];
        hk *= h;
    }
    return out;
}

TruncatedFunctional compose(const TruncatedFunctional& a, const TruncatedFunctional& b) {
    if (!is_character(a) || !is_character(b))
        throw std::invalid_argument("compose: both inputs must be characters");
    return convolve(a, b);
}

TruncatedFunctional scale_step(const TruncatedFunctional& a, const Rational& s) {
    TruncatedFunctional out(a.instance(), a.cutoff(), a.algebra());
    for (const auto& be : a.instance()->basis_up_to(a.cutoff())) {
        const long deg = degree_as_long(be.degree);
        const Scalar v = a.value(be.id);
        if (!v.is_zero()) out.set(be.id, v.scaled(rational_pow(s, deg)));
    }
    return out;
}

}  // namespace hopfchar
