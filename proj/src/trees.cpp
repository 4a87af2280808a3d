#include "hopfchar/trees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hopfchar {

Tree Tree::leaf() {
    Tree t;
    t.id_ = "[]";
    t.order_ = 1;
    return t;
}

Tree Tree::with_children(std::vector<Tree> children) {
    Tree t;
    std::sort(children.begin(), children.end(),
              [](const Tree& a, const Tree& b) { return a.id() < b.id(); });
    t.order_ = 1;
    t.id_ = "[";
    for (size_t i = 0; i < children.size(); ++i) {
        if (i) t.id_ += ',';
        t.order_ += children[i].order();
        t.id_ += children[i].id();
    }
    t.id_ += "]";
    t.children_ = std::move(children);
    return t;
}

namespace {

Tree parse_at(const std::string& s, size_t& pos) {
    if (pos >= s.size() || s[pos] != '[') throw std::invalid_argument("bad tree id: " + s);
    ++pos;
    std::vector<Tree> children;
    while (pos < s.size() && s[pos] == '[') {
        children.push_back(parse_at(s, pos));
        if (pos < s.size() && s[pos] == ',') ++pos;
    }
    if (pos >= s.size() || s[pos] != ']') throw std::invalid_argument("bad tree id: " + s);
    ++pos;
    return Tree::with_children(std::move(children));
}

}  // namespace

Tree Tree::parse(const std::string& id) {
    size_t pos = 0;
    Tree t = parse_at(id, pos);
    if (pos != id.size()) throw std::invalid_argument("trailing characters in tree id: " + id);
    return t;
}

std::vector<Tree> gen_trees(int max_order) {
    if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
    // trees_by_order[n] holds every class with exactly n nodes.
    std::vector<std::vector<Tree>> by_order(max_order + 1);
    by_order[1] = {Tree::leaf()};

    // Flat list of all trees of order < n, used to build child multisets.
    std::vector<Tree> smaller;

    for (int n = 2; n <= max_order; ++n) {
        smaller.clear();
        for (int k = 1; k < n; ++k)
            smaller.insert(smaller.end(), by_order[k].begin(), by_order[k].end());

        // Multisets of trees with total order n-1, chosen with nondecreasing
        // index so each multiset appears once.
        std::vector<Tree> chosen;
        auto rec = [&](auto&& self, size_t from, int remaining) -> void {
            if (remaining == 0) {
                by_order[n].push_back(Tree::with_children(chosen));
                return;
            }
            for (size_t i = from; i < smaller.size(); ++i) {
                if (smaller[i].order() > remaining) continue;
                chosen.push_back(smaller[i]);
                self(self, i, remaining - smaller[i].order());
                chosen.pop_back();
            }
        };
        rec(rec, 0, n - 1);

        std::sort(by_order[n].begin(), by_order[n].end());
        by_order[n].erase(std::unique(by_order[n].begin(), by_order[n].end()),
                          by_order[n].end());
    }

    std::vector<Tree> out;
    for (int n = 1; n <= max_order; ++n)
        out.insert(out.end(), by_order[n].begin(), by_order[n].end());
    return out;
}

Rational tree_gamma(const Tree& t) {
    Rational g(t.order());
    for (const Tree& c : t.children()) g *= tree_gamma(c);
    return g;
}

Rational tree_sigma(const Tree& t) {
    Rational s(1);
    size_t i = 0;
    const auto& ch = t.children();
    while (i < ch.size()) {
        size_t j = i;
        while (j < ch.size() && ch[j].id() == ch[i].id()) ++j;
        const size_t mult = j - i;
        Rational fact(1);
        for (size_t k = 2; k <= mult; ++k) fact *= Rational(k);
        s *= fact * rational_pow(tree_sigma(ch[i]), static_cast<long>(mult));
        i = j;
    }
    return s;
}

Forest::Forest(std::vector<std::string> tree_ids) : trees_(std::move(tree_ids)) {
    std::sort(trees_.begin(), trees_.end());
}

Forest Forest::single(const std::string& tree_id) { return Forest({tree_id}); }

Forest Forest::parse(const std::string& forest_id) {
    if (forest_id == "1") return Forest();
    std::vector<std::string> ids;
    size_t start = 0;
    while (start <= forest_id.size()) {
        size_t dot = forest_id.find('.', start);
        if (dot == std::string::npos) {
            ids.push_back(forest_id.substr(start));
            break;
        }
        ids.push_back(forest_id.substr(start, dot - start));
        start = dot + 1;
    }
    for (const auto& id : ids)
        if (id.empty()) throw std::invalid_argument("bad forest id: " + forest_id);
    return Forest(std::move(ids));
}

Forest Forest::merged(const Forest& o) const {
    std::vector<std::string> ids = trees_;
    ids.insert(ids.end(), o.trees_.begin(), o.trees_.end());
    return Forest(std::move(ids));
}

Forest Forest::without_index(size_t i) const {
    std::vector<std::string> ids = trees_;
    ids.erase(ids.begin() + static_cast<long>(i));
    return Forest(std::move(ids));
}

int Forest::order() const {
    int n = 0;
    // node count of a canonical tree id equals its '[' count
    for (const auto& id : trees_)
        n += static_cast<int>(std::count(id.begin(), id.end(), '['));
    return n;
}

std::string Forest::id() const {
    if (trees_.empty()) return "1";
    std::string s = trees_[0];
    for (size_t i = 1; i < trees_.size(); ++i) {
        s += '.';
        s += trees_[i];
    }
    return s;
}

}  // namespace hopfchar
