#include "hopfchar/hopf.hpp"

#include <algorithm>
#include <set>

namespace hopfchar {

void lincomb_add(LinComb& lc, const std::string& id, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = lc.find(id);
    if (it == lc.end()) {
        lc.emplace(id, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) lc.erase(it);
    }
}

LinComb lincomb_scaled(const LinComb& lc, const Rational& k) {
    LinComb out;
    if (k == 0) return out;
    for (const auto& [id, c] : lc) out.emplace(id, c * k);
    return out;
}

TensorSum tensor_canonical(TensorSum terms) {
    std::map<std::pair<std::string, std::string>, Rational> acc;
    for (auto& t : terms) acc[{t.left, t.right}] += t.coeff;
    TensorSum out;
    out.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (c != 0) out.push_back({k.first, k.second, c});
    return out;
}

void tensor_add(TensorSum& dst, const std::string& l, const std::string& r, const Rational& c) {
    if (c != 0) dst.push_back({l, r, c});
}

MultiTensorSum multi_tensor_canonical(MultiTensorSum terms) {
    std::map<std::vector<std::string>, Rational> acc;
    for (auto& t : terms) acc[t.legs] += t.coeff;
    MultiTensorSum out;
    out.reserve(acc.size());
    for (auto& [legs, c] : acc)
        if (c != 0) out.push_back({legs, c});
    return out;
}

bool HopfInstance::is_connected() const { return basis_of_degree(Degree(0)).size() == 1; }

std::vector<BasisElement> HopfInstance::basis_up_to(const Degree& cutoff) const {
    std::vector<BasisElement> out;
    for (const Degree& d : degrees_up_to(cutoff)) {
        auto ids = basis_of_degree(d);
        std::sort(ids.begin(), ids.end());
        for (auto& id : ids) out.push_back({std::move(id), d});
    }
    return out;
}

TensorSum HopfInstance::reduced_coproduct(const std::string& id) const {
    if (!is_connected())
        throw std::invalid_argument("reduced_coproduct requires a connected instance");
    const std::string unit = unit_id();
    if (id == unit) return {};
    if (degree_of(id) == 0)
        throw std::invalid_argument("reduced_coproduct: degree-0 input is not the unit");
    TensorSum terms = coproduct(id);
    terms.push_back({id, unit, Rational(-1)});
    terms.push_back({unit, id, Rational(-1)});
    terms = tensor_canonical(std::move(terms));
    for (const auto& t : terms) {
        if (degree_of(t.left) == 0 || degree_of(t.right) == 0)
            throw std::runtime_error("reduced coproduct of '" + id +
                                     "' kept a degree-0 tensor leg; coproduct is malformed");
    }
    return terms;
}

MultiTensorSum HopfInstance::iterated_coproduct(const std::string& id, int n) const {
    if (n < 1) throw std::invalid_argument("iterated_coproduct needs n >= 1");
    MultiTensorSum cur{{{id}, Rational(1)}};
    for (int step = 0; step < n; ++step) {
        MultiTensorSum next;
        for (const auto& term : cur) {
            const std::string& last = term.legs.back();
            for (const auto& t : coproduct(last)) {
                MultiTensorTerm nt;
                nt.legs.assign(term.legs.begin(), term.legs.end() - 1);
                nt.legs.push_back(t.left);
                nt.legs.push_back(t.right);
                nt.coeff = term.coeff * t.coeff;
                next.push_back(std::move(nt));
            }
        }
        cur = std::move(next);
    }
    return multi_tensor_canonical(std::move(cur));
}

LinComb HopfInstance::antipode(const std::string& id) const {
    {
        std::lock_guard<std::mutex> lock(antipode_mutex_);
        auto it = antipode_cache_.find(id);
        if (it != antipode_cache_.end()) return it->second;
    }
    LinComb result;
    if (auto table = supplied_antipode(id)) {
        result = std::move(*table);
    } else if (!is_connected()) {
        throw std::invalid_argument(
            "antipode: non-connected instance '" + name() +
            "' must supply an antipode table");
    } else if (id == unit_id()) {
        result = LinComb{{id, Rational(1)}};
    } else {
        result = LinComb{{id, Rational(-1)}};
        for (const auto& t : reduced_coproduct(id)) {
            // deg(left) < deg(id), so the recursion is well-founded.
            const LinComb s_left = antipode(t.left);
            for (const auto& [lid, lc] : s_left) {
                const LinComb prod = product(lid, t.right);
                for (const auto& [pid, pc] : prod)
                    lincomb_add(result, pid, -(t.coeff * lc * pc));
            }
        }
    }
    std::lock_guard<std::mutex> lock(antipode_mutex_);
    return antipode_cache_.emplace(id, std::move(result)).first->second;
}

Scalar HopfInstance::eval_counit(const std::string& id, const AlgebraDescriptor& alg) const {
    return Scalar::one(alg).scaled(counit(id));
}

LinComb lincomb_product(const HopfInstance& H, const LinComb& a, const LinComb& b) {
    LinComb out;
    for (const auto& [ia, ca] : a)
        for (const auto& [ib, cb] : b)
            for (const auto& [ip, cp] : H.product(ia, ib)) lincomb_add(out, ip, ca * cb * cp);
    return out;
}

bool AxiomReport::all_pass() const {
    for (const AxiomCheck* c :
         {&coassociativity, &counit_left, &counit_right, &antipode_left, &antipode_right,
          &product_grading, &coproduct_grading, &counit_positive_degree, &index_monoid})
        if (!c->pass) return false;
    return true;
}

namespace {

void fail_once(AxiomCheck& check, const std::string& witness) {
    if (!check.pass) return;
    check.pass = false;
    check.witness = witness;
}

MultiTensorSum expand_left_then(const HopfInstance& H, const std::string& id) {
    // (Delta (x) id) o Delta, for comparison against iterated_coproduct (right expansion).
    MultiTensorSum out;
    for (const auto& t : H.coproduct(id))
        for (const auto& u : H.coproduct(t.left))
            out.push_back({{u.left, u.right, t.right}, t.coeff * u.coeff});
    return multi_tensor_canonical(std::move(out));
}

}  // namespace

AxiomReport verify_axioms(const HopfInstance& H, const Degree& max_degree) {
    AxiomReport rep;
    const std::string unit = H.unit_id();
    const bool connected = H.is_connected();
    const auto basis = H.basis_up_to(max_degree);

    // Index monoid: the monoid generated by the realized degrees has a finite
    // initial segment below the cutoff and contains 0 and every realized
    // degree. (The realized set itself need not be sum-closed: in a
    // finite-dimensional instance the higher graded pieces are empty.)
    {
        const auto degs = H.degrees_up_to(max_degree);
        for (const Degree& a : degs)
            if (a < 0) fail_once(rep.index_monoid, "negative degree " + rational_to_string(a));
        std::set<Degree> monoid{Degree(0)};
        constexpr size_t kSegmentCap = 100000;
        bool grew = true;
        while (grew && monoid.size() <= kSegmentCap) {
            grew = false;
            for (const Degree& m : std::set<Degree>(monoid)) {
                for (const Degree& g : degs) {
                    const Degree s = m + g;
                    if (s <= max_degree && monoid.insert(s).second) grew = true;
                }
            }
        }
        if (monoid.size() > kSegmentCap)
            fail_once(rep.index_monoid, "initial segment not finite below cutoff");
        for (const Degree& a : degs)
            if (!monoid.count(a))
                fail_once(rep.index_monoid, rational_to_string(a) + " outside the monoid");
        if (degs.empty() || degs.front() != 0)
            fail_once(rep.index_monoid, "degree 0 not realized");
    }

    for (const auto& be : basis) {
        const std::string& h = be.id;
        const TensorSum delta = H.coproduct(h);

        // Coproduct grading: deg(left) + deg(right) == deg(h).
        for (const auto& t : delta) {
            if (H.degree_of(t.left) + H.degree_of(t.right) != be.degree) {
                fail_once(rep.coproduct_grading,
                          h + " -> (" + t.left + ", " + t.right + ")");
                break;
            }
        }

        // Coassociativity via both bracketings.
        {
            const MultiTensorSum lhs = expand_left_then(H, h);
            const MultiTensorSum rhs = H.iterated_coproduct(h, 2);
            bool eq = lhs.size() == rhs.size();
            for (size_t i = 0; eq && i < lhs.size(); ++i)
                eq = lhs[i].legs == rhs[i].legs && lhs[i].coeff == rhs[i].coeff;
            if (!eq) fail_once(rep.coassociativity, h);
        }

        // Counit identities: (eps (x) id)Delta = id = (id (x) eps)Delta.
        {
            LinComb left, right;
            for (const auto& t : delta) {
                lincomb_add(left, t.right, t.coeff * H.counit(t.left));
                lincomb_add(right, t.left, t.coeff * H.counit(t.right));
            }
            const LinComb expect{{h, Rational(1)}};
            if (left != expect) fail_once(rep.counit_left, h);
            if (right != expect) fail_once(rep.counit_right, h);
        }

        // Antipode identities: m(S (x) id)Delta = u eps = m(id (x) S)Delta.
        {
            LinComb left, right;
            for (const auto& t : delta) {
                const LinComb sl = H.antipode(t.left);
                for (const auto& [lid, lc] : sl)
                    for (const auto& [pid, pc] : H.product(lid, t.right))
                        lincomb_add(left, pid, t.coeff * lc * pc);
                const LinComb sr = H.antipode(t.right);
                for (const auto& [rid, rc] : sr)
                    for (const auto& [pid, pc] : H.product(t.left, rid))
                        lincomb_add(right, pid, t.coeff * rc * pc);
            }
            LinComb expect;
            lincomb_add(expect, unit, H.counit(h));
            if (left != expect) fail_once(rep.antipode_left, h);
            if (right != expect) fail_once(rep.antipode_right, h);
        }

        // Connected instances: counit vanishes in positive degree.
        if (connected && be.degree > 0 && H.counit(h) != 0)
            fail_once(rep.counit_positive_degree, h);
    }

    // Product grading on pairs within the cutoff.
    for (const auto& a : basis) {
        for (const auto& b : basis) {
            if (a.degree + b.degree > max_degree) continue;
            for (const auto& [pid, pc] : H.product(a.id, b.id)) {
                (void)pc;
                if (H.degree_of(pid) != a.degree + b.degree) {
                    fail_once(rep.product_grading, a.id + " * " + b.id + " -> " + pid);
                    break;
                }
            }
        }
    }

    return rep;
}

}  // namespace hopfchar
