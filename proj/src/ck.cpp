#include "hopfchar/ck.hpp"

#include <algorithm>

namespace hopfchar {

namespace {

struct Cut {
    Forest falloff;  // forest of fall-off subtrees
    Tree kept;       // root-containing connected subset, as a tree
};

// Every connected root-containing subset of t, with multiplicity: each child
// subtree is either dropped whole into the falloff or recursively cut.
std::vector<Cut> root_cuts(const Tree& t) {
    // Fold children one at a time; keep combinations as (falloff, kept children).
    struct Partial {
        Forest falloff;
        std::vector<Tree> kept;
    };
    std::vector<Partial> partials{{Forest::empty(), {}}};
    for (const Tree& child : t.children()) {
        std::vector<Cut> child_cuts = root_cuts(child);
        std::vector<Partial> next;
        for (const auto& p : partials) {
            // child dropped whole
            Partial off = p;
            off.falloff = off.falloff.merged(Forest::single(child.id()));
            next.push_back(std::move(off));
            // child cut below its root
            for (const auto& cc : child_cuts) {
                Partial on = p;
                on.falloff = on.falloff.merged(cc.falloff);
                on.kept.push_back(cc.kept);
                next.push_back(std::move(on));
            }
        }
        partials = std::move(next);
    }

    std::vector<Cut> out;
    out.reserve(partials.size());
    for (auto& p : partials) out.push_back({std::move(p.falloff), Tree::with_children(std::move(p.kept))});
    return out;
}

long floor_nonneg(const Degree& d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    return (numerator(d) / denominator(d)).convert_to<long>();
}

}  // namespace

Degree CkInstance::degree_of(const std::string& id) const {
    if (id == "1") return Degree(0);
    return Degree(static_cast<long>(std::count(id.begin(), id.end(), '[')));
}

std::vector<std::string> CkInstance::basis_of_degree(const Degree& d) const {
    if (d < 0 || !rational_is_integer(d)) return {};
    const int n = static_cast<int>(floor_nonneg(d));
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = forests_by_order_.find(n);
        if (it != forests_by_order_.end()) return it->second;
    }
    std::vector<std::string> out;
    if (n == 0) {
        out = {"1"};
    } else {
        const std::vector<Tree> trees = gen_trees(n);
        std::vector<std::string> chosen;
        auto rec = [&](auto&& self, size_t from, int remaining) -> void {
            if (remaining == 0) {
                out.push_back(Forest(chosen).id());
                return;
            }
            for (size_t i = from; i < trees.size(); ++i) {
                if (trees[i].order() > remaining) continue;
                chosen.push_back(trees[i].id());
                self(self, i, remaining - trees[i].order());
                chosen.pop_back();
            }
        };
        rec(rec, 0, n);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return forests_by_order_.emplace(n, std::move(out)).first->second;
}

std::vector<Degree> CkInstance::degrees_up_to(const Degree& cutoff) const {
    std::vector<Degree> out;
    if (cutoff < 0) return out;
    for (long n = 0; n <= floor_nonneg(cutoff); ++n) out.emplace_back(n);
    return out;
}

LinComb CkInstance::product(const std::string& a, const std::string& b) const {
    const Forest fa = Forest::parse(a), fb = Forest::parse(b);
    return LinComb{{fa.merged(fb).id(), Rational(1)}};
}

TensorSum CkInstance::tree_coproduct(const Tree& t) const {
    TensorSum terms;
    terms.push_back({t.id(), "1", Rational(1)});
    for (const auto& cut : root_cuts(t))
        terms.push_back({cut.falloff.id(), cut.kept.id(), Rational(1)});
    return tensor_canonical(std::move(terms));
}

TensorSum CkInstance::coproduct(const std::string& id) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = coproduct_cache_.find(id);
        if (it != coproduct_cache_.end()) return it->second;
    }
    const Forest f = Forest::parse(id);
    // Delta is an algebra morphism: multiply the per-tree coproducts,
    // merging forests legwise.
    struct LegTerm {
        Forest left, right;
        Rational coeff;
    };
    std::vector<LegTerm> acc{{Forest::empty(), Forest::empty(), Rational(1)}};
    for (const auto& tree_id : f.trees()) {
        const TensorSum dt = tree_coproduct(Tree::parse(tree_id));
        std::vector<LegTerm> next;
        next.reserve(acc.size() * dt.size());
        for (const auto& a : acc) {
            for (const auto& t : dt) {
                next.push_back({a.left.merged(Forest::parse(t.left)),
                                a.right.merged(Forest::parse(t.right)), a.coeff * t.coeff});
            }
        }
        acc = std::move(next);
    }
    TensorSum terms;
    terms.reserve(acc.size());
    for (const auto& a : acc) terms.push_back({a.left.id(), a.right.id(), a.coeff});
    terms = tensor_canonical(std::move(terms));
    std::lock_guard<std::mutex> lock(mutex_);
    return coproduct_cache_.emplace(id, std::move(terms)).first->second;
}

Rational CkInstance::counit(const std::string& id) const {
    return id == "1" ? Rational(1) : Rational(0);
}

HopfPtr make_ck() { return std::make_shared<CkInstance>(); }

}  // namespace hopfchar
