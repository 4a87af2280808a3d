#pragma once

#include "hopfchar/hopf.hpp"
#include "hopfchar/trees.hpp"

namespace hopfchar {

/// The Connes-Kreimer Hopf algebra of rooted trees: the free commutative
/// algebra on trees, graded by node count, with the coproduct
///   Delta(tau) = tau (x) 1 + sum_sigma (tau \ sigma) (x) sigma
/// over the connected root-containing subsets sigma of tau (sigma = tau
/// contributes 1 (x) tau); extended multiplicatively to forests.
class CkInstance final : public HopfInstance {
  public:
    CkInstance() = default;

    std::string name() const override { return "ck"; }
    std::string unit_id() const override { return "1"; }
    Degree degree_of(const std::string& id) const override;
    std::vector<std::string> basis_of_degree(const Degree& d) const override;
    std::vector<Degree> degrees_up_to(const Degree& cutoff) const override;
    LinComb product(const std::string& a, const std::string& b) const override;
    TensorSum coproduct(const std::string& id) const override;
    Rational counit(const std::string& id) const override;

    /// Coproduct of a single tree, from the root-subset enumeration.
    TensorSum tree_coproduct(const Tree& t) const;

  private:
    mutable std::mutex mutex_;
    mutable std::map<int, std::vector<std::string>> forests_by_order_;
    mutable std::map<std::string, TensorSum> coproduct_cache_;
};

HopfPtr make_ck();

}  // namespace hopfchar
