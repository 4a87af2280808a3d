#pragma once

#include <string>
#include <vector>

#include "hopfchar/scalar.hpp"

namespace hopfchar {

/// Canonical rooted tree: children recursively canonicalized and sorted, so
/// the parenthesis id is unique per isomorphism class ("[]", "[[]]", ...).
class Tree {
  public:
    static Tree leaf();
    static Tree with_children(std::vector<Tree> children);
    static Tree parse(const std::string& id);

    const std::vector<Tree>& children() const { return children_; }
    const std::string& id() const { return id_; }
    int order() const { return order_; }

    bool operator==(const Tree& o) const { return id_ == o.id_; }
    bool operator<(const Tree& o) const {
        return order_ != o.order_ ? order_ < o.order_ : id_ < o.id_;
    }

  private:
    Tree() = default;
    std::vector<Tree> children_;
    std::string id_;
    int order_ = 1;
};

/// All isomorphism classes with 1..max_order nodes, sorted by (order, id).
std::vector<Tree> gen_trees(int max_order);

/// Tree factorial: gamma(leaf) = 1, gamma(t) = |t| * prod gamma(child).
Rational tree_gamma(const Tree& t);

/// Symmetry coefficient: product over distinct child classes c with
/// multiplicity k of k! * sigma(c)^k.
Rational tree_sigma(const Tree& t);

/// Commutative monomial of trees; the basis of the Connes-Kreimer instance.
/// Canonical id: tree ids sorted and joined with '.', empty forest is "1".
class Forest {
  public:
    Forest() = default;
    explicit Forest(std::vector<std::string> tree_ids);
    static Forest empty() { return Forest(); }
    static Forest single(const std::string& tree_id);
    static Forest parse(const std::string& forest_id);

    Forest merged(const Forest& o) const;
    Forest without_index(size_t i) const;

    const std::vector<std::string>& trees() const { return trees_; }
    bool is_empty() const { return trees_.empty(); }
    int order() const;
    std::string id() const;

  private:
    std::vector<std::string> trees_;  // sorted tree ids
};

}  // namespace hopfchar
