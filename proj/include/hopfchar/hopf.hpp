#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopfchar/scalar.hpp"

namespace hopfchar {

/// Degrees are exact nonnegative rationals so that index-monoid gradings
/// (e.g. half-integer degrees) are the same code path as N_0 gradings.
using Degree = Rational;

struct BasisElement {
    std::string id;
    Degree degree;
};

/// Linear combination of basis elements over K, canonical form: sorted by id
/// (map order), zero coefficients dropped.
using LinComb = std::map<std::string, Rational>;

void lincomb_add(LinComb& lc, const std::string& id, const Rational& coeff);
LinComb lincomb_scaled(const LinComb& lc, const Rational& k);

struct TensorTerm {
    std::string left, right;
    Rational coeff;

    bool operator==(const TensorTerm& o) const {
        return left == o.left && right == o.right && coeff == o.coeff;
    }
};
/// Canonical form: sorted by (left, right), like terms merged, zeros dropped.
using TensorSum = std::vector<TensorTerm>;

TensorSum tensor_canonical(TensorSum terms);
void tensor_add(TensorSum& dst, const std::string& l, const std::string& r, const Rational& c);

struct MultiTensorTerm {
    std::vector<std::string> legs;
    Rational coeff;
};
using MultiTensorSum = std::vector<MultiTensorTerm>;

MultiTensorSum multi_tensor_canonical(MultiTensorSum terms);

/// A graded Hopf algebra presented by basis: structure constants for product
/// and coproduct, counit, grading, unit basis element, and an antipode that is
/// either supplied (finite-dimensional instances) or computed by the
/// triangular recursion (connected instances).
///
/// Instances are immutable after construction; the caches are guarded so that
/// concurrent read-through population is safe.
class HopfInstance {
  public:
    virtual ~HopfInstance() = default;

    virtual std::string name() const = 0;
    virtual std::string unit_id() const = 0;
    virtual Degree degree_of(const std::string& id) const = 0;
    /// Basis ids of exactly this degree, sorted; empty when none.
    virtual std::vector<std::string> basis_of_degree(const Degree& d) const = 0;
    /// Sorted list of degrees realized in [0, cutoff].
    virtual std::vector<Degree> degrees_up_to(const Degree& cutoff) const = 0;
    virtual LinComb product(const std::string& a, const std::string& b) const = 0;
    virtual TensorSum coproduct(const std::string& id) const = 0;
    virtual Rational counit(const std::string& id) const = 0;

    bool is_connected() const;

    /// All basis elements with degree <= cutoff, sorted by (degree, id).
    std::vector<BasisElement> basis_up_to(const Degree& cutoff) const;

    /// Delta(h) with the primitive boundary terms h(x)1 and 1(x)h removed.
    /// Connected instances only; reduced_coproduct(unit) is the empty sum.
    TensorSum reduced_coproduct(const std::string& id) const;

    /// n applications of Delta (n+1 tensor legs), expanding the rightmost leg:
    /// Delta^n = (id (x) Delta^{n-1}) o Delta.
    MultiTensorSum iterated_coproduct(const std::string& id, int n) const;

    /// Antipode as a linear combination; uses the supplied table when present,
    /// otherwise the triangular recursion S(h) = -h - sum S(h')h'' over the
    /// reduced coproduct (connected instances only).
    LinComb antipode(const std::string& id) const;

    Scalar eval_counit(const std::string& id, const AlgebraDescriptor& alg) const;

  protected:
    virtual std::optional<LinComb> supplied_antipode(const std::string&) const {
        return std::nullopt;
    }

  private:
    mutable std::mutex antipode_mutex_;
    mutable std::map<std::string, LinComb> antipode_cache_;
};

using HopfPtr = std::shared_ptr<const HopfInstance>;

/// Product of two linear combinations, expanded through instance.product.
LinComb lincomb_product(const HopfInstance& H, const LinComb& a, const LinComb& b);

struct AxiomCheck {
    bool pass = true;
    std::string witness;  // first counterexample, empty when pass
};

struct AxiomReport {
    AxiomCheck coassociativity;
    AxiomCheck counit_left;
    AxiomCheck counit_right;
    AxiomCheck antipode_left;
    AxiomCheck antipode_right;
    AxiomCheck product_grading;
    AxiomCheck coproduct_grading;
    AxiomCheck counit_positive_degree;  // connected instances: eps = 0 in degree > 0
    AxiomCheck index_monoid;

    bool all_pass() const;
};

/// Checks, with exact arithmetic, every basis element of degree <= max_degree:
/// coassociativity, both counit identities, both antipode identities, grading
/// compatibility of product and coproduct, and the index-monoid property of
/// the realized degrees.
AxiomReport verify_axioms(const HopfInstance& H, const Degree& max_degree);

}  // namespace hopfchar
