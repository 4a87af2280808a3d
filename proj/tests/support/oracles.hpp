#pragma once

// Test-only oracles, independent of the library implementation paths they
// check: truncated power-series arithmetic in the step size, an explicit
// Runge-Kutta stepper over Q[[h]], Taylor coefficients of the exact flow, a
// level-sequence tree canonicalization, and a parent-array tree enumerator.

#include <algorithm>
#include <map>
#include <vector>

#include "hopfchar/bseries.hpp"
#include "hopfchar/trees.hpp"

namespace hopfchar::testing {

/// Truncated power series over Q with fixed coefficient count.
struct Series {
    std::vector<Rational> c;

    static Series zero(size_t n) { return {std::vector<Rational>(n, Rational(0))}; }
    static Series constant(size_t n, const Rational& v) {
        Series s = zero(n);
        s.c[0] = v;
        return s;
    }

    Series operator+(const Series& o) const {
        Series r = *this;
        for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
        return r;
    }
    Series operator-(const Series& o) const {
        Series r = *this;
        for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
        return r;
    }
    Series operator*(const Series& o) const {
        Series r = zero(c.size());
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            for (size_t j = 0; i + j < c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        }
        return r;
    }
    Series scaled(const Rational& k) const {
        Series r = *this;
        for (auto& v : r.c) v *= k;
        return r;
    }
    /// Multiplication by the series variable (one-step shift).
    Series shifted_up() const {
        Series r = zero(c.size());
        for (size_t i = 0; i + 1 < c.size(); ++i) r.c[i + 1] = c[i];
        return r;
    }
};

using SeriesVec = std::vector<Series>;

/// Test-side polynomial vector field with explicit terms (the oracle keeps
/// its own representation so it does not depend on the library type).
struct FieldOracle {
    struct Term {
        int component;
        std::array<int, 3> exps;
        Rational coeff;
    };
    int dim;
    std::vector<Term> terms;

    SeriesVec eval(const SeriesVec& y) const {
        const size_t n = y[0].c.size();
        SeriesVec out(dim, Series::zero(n));
        for (const auto& t : terms) {
            Series acc = Series::constant(n, t.coeff);
            for (int v = 0; v < dim; ++v)
                for (int e = 0; e < t.exps[static_cast<size_t>(v)]; ++e) acc = acc * y[static_cast<size_t>(v)];
            out[static_cast<size_t>(t.component)] = out[static_cast<size_t>(t.component)] + acc;
        }
        return out;
    }

    std::vector<Rational> eval_point(const std::vector<Rational>& y) const {
        std::vector<Rational> out(dim, Rational(0));
        for (const auto& t : terms) {
            Rational acc = t.coeff;
            for (int v = 0; v < dim; ++v) acc *= rational_pow(y[static_cast<size_t>(v)], t.exps[static_cast<size_t>(v)]);
            out[static_cast<size_t>(t.component)] += acc;
        }
        return out;
    }

    PolyVectorField to_field() const {
        PolyVectorField f(dim);
        for (const auto& t : terms) f.add_term(t.component, t.exps, t.coeff);
        return f;
    }
};

/// One explicit RK step as a series in the step size h: y1(h) up to h^K.
inline SeriesVec rk_step_series(const ButcherTableau& t, const FieldOracle& f,
                                const std::vector<Rational>& y0, size_t order) {
    if (!t.is_explicit()) throw std::invalid_argument("series oracle needs an explicit tableau");
    const size_t n = order + 1;
    const size_t s = t.stages();
    const int d = f.dim;

    SeriesVec y0s(d, Series::zero(n));
    for (int i = 0; i < d; ++i) y0s[static_cast<size_t>(i)] = Series::constant(n, y0[static_cast<size_t>(i)]);

    std::vector<SeriesVec> k;
    for (size_t i = 0; i < s; ++i) {
        SeriesVec yi = y0s;
        for (size_t j = 0; j < i; ++j) {
            if (t.A[i][j] == 0) continue;
            for (int v = 0; v < d; ++v)
                yi[static_cast<size_t>(v)] =
                    yi[static_cast<size_t>(v)] + k[j][static_cast<size_t>(v)].scaled(t.A[i][j]).shifted_up();
        }
        k.push_back(f.eval(yi));
    }
    SeriesVec y1 = y0s;
    for (size_t i = 0; i < s; ++i)
        for (int v = 0; v < d; ++v)
            y1[static_cast<size_t>(v)] =
                y1[static_cast<size_t>(v)] + k[i][static_cast<size_t>(v)].scaled(t.b[i]).shifted_up();
    return y1;
}

/// Taylor coefficients of the exact solution of y' = f(y), y(0) = y0.
inline SeriesVec ode_taylor(const FieldOracle& f, const std::vector<Rational>& y0,
                            size_t order) {
    const size_t n = order + 1;
    const int d = f.dim;
    SeriesVec y(d, Series::zero(n));
    for (int i = 0; i < d; ++i) y[static_cast<size_t>(i)].c[0] = y0[static_cast<size_t>(i)];
    for (size_t kk = 0; kk + 1 < n; ++kk) {
        const SeriesVec fy = f.eval(y);
        for (int i = 0; i < d; ++i)
            y[static_cast<size_t>(i)].c[kk + 1] = fy[static_cast<size_t>(i)].c[kk] / Rational(static_cast<long>(kk) + 1);
    }
    return y;
}

/// Independent canonicalization: the level sequence of a rooted tree with
/// subtree sequences sorted descending, unique per isomorphism class.
inline std::vector<int> level_sequence(const Tree& t, int depth = 0) {
    std::vector<std::vector<int>> child_seqs;
    for (const Tree& c : t.children()) child_seqs.push_back(level_sequence(c, depth + 1));
    std::sort(child_seqs.begin(), child_seqs.end(), std::greater<>());
    std::vector<int> out{depth};
    for (const auto& s : child_seqs) out.insert(out.end(), s.begin(), s.end());
    return out;
}

/// Second enumeration path: all rooted trees on n nodes as parent arrays
/// (parent[i] < i), deduplicated by level sequence.
inline std::map<std::vector<int>, long> trees_by_parent_arrays(int n) {
    std::map<std::vector<int>, long> classes;
    std::vector<int> parent(static_cast<size_t>(n), 0);
    auto build = [&]() {
        std::vector<std::vector<int>> child_ids(static_cast<size_t>(n));
        for (int i = 1; i < n; ++i) child_ids[static_cast<size_t>(parent[static_cast<size_t>(i)])].push_back(i);
        auto mk = [&](auto&& self, int node) -> Tree {
            std::vector<Tree> ch;
            for (int c : child_ids[static_cast<size_t>(node)]) ch.push_back(self(self, c));
            return Tree::with_children(std::move(ch));
        };
        const Tree t = mk(mk, 0);
        classes[level_sequence(t)]++;
    };
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            build();
            return;
        }
        for (int p = 0; p < i; ++p) {
            parent[static_cast<size_t>(i)] = p;
            self(self, i + 1);
        }
    };
    if (n >= 1) rec(rec, 1);
    return classes;
}

}  // namespace hopfchar::testing
