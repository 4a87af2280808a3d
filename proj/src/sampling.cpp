#include "hopfchar/sampling.hpp"

#include "hopfchar/trees.hpp"

namespace hopfchar {

Rational random_rational(Rng& rng, int max_num, int max_den) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

Rational random_unit_rational(Rng& rng, int max_den) {
    std::uniform_int_distribution<int> den(1, max_den);
    const int q = den(rng);
    std::uniform_int_distribution<int> num(-q, q);
    return Rational(num(rng), q);
}

TruncatedFunctional random_functional(HopfPtr H, const Degree& cutoff, Rng& rng) {
    TruncatedFunctional out(H, cutoff, AlgebraDescriptor::rational());
    for (const auto& be : H->basis_up_to(cutoff))
        out.set(be.id, Scalar::of_rational(random_rational(rng)));
    return out;
}

TruncatedFunctional random_ck_character(HopfPtr ck, const Degree& cutoff, Rng& rng) {
    TruncatedFunctional out(ck, cutoff, AlgebraDescriptor::rational());
    std::map<std::string, Rational> on_trees;
    for (const auto& be : ck->basis_up_to(cutoff)) {
        const Forest f = Forest::parse(be.id);
        if (f.trees().size() == 1) on_trees.emplace(be.id, random_rational(rng));
    }
    for (const auto& be : ck->basis_up_to(cutoff)) {
        const Forest f = Forest::parse(be.id);
        Rational v(1);
        for (const auto& tid : f.trees()) v *= on_trees.at(tid);
        out.set(be.id, Scalar::of_rational(v));
    }
    return out;
}

TruncatedFunctional random_ck_infinitesimal(HopfPtr ck, const Degree& cutoff, Rng& rng) {
    TruncatedFunctional out(ck, cutoff, AlgebraDescriptor::rational());
    for (const auto& be : ck->basis_up_to(cutoff)) {
        const Forest f = Forest::parse(be.id);
        if (f.trees().size() == 1) out.set(be.id, Scalar::of_rational(random_rational(rng)));
    }
    return out;
}

}  // namespace hopfchar
