#pragma once

#include <array>
#include <random>

#include "hopfchar/charalg.hpp"
#include "hopfchar/hopf.hpp"

namespace hopfchar {

/// A finite-dimensional coalgebra by structure constants:
/// Delta(e_i) = sum nu_i^{jk} e_j (x) e_k, counit vector eps(e_i).
struct FiniteCoalgebra {
    std::string name = "findim";
    int dim = 0;
    std::vector<std::string> ids;
    // nu[i] lists (j, k, coeff) with nonzero coeff.
    std::vector<std::vector<std::tuple<int, int, Rational>>> nu;
    std::vector<Rational> counit;

    /// K = d^2 * max{|nu_i^{jk}|, 1}.
    Rational norm_constant() const;

    struct CoalgebraCheck {
        bool coassociative = true;
        bool counital = true;
        std::string witness;
    };
    CoalgebraCheck check_axioms() const;

    /// n-fold tensor legs of Delta^{n-1} applied to e_i (n >= 1 legs).
    std::vector<std::pair<std::vector<int>, Rational>> iterated_legs(int i, int n_legs) const;
};

using BVector = std::vector<Scalar>;

/// (alpha * beta)_i = sum nu_i^{jk} alpha_j beta_k.
BVector convolve_findim(const FiniteCoalgebra& C, const BVector& alpha, const BVector& beta);

/// The counit vector over B, the convolution unit.
BVector counit_vector(const FiniteCoalgebra& C, const AlgebraDescriptor& alg);

/// ||alpha||_K = K * max_i ||alpha_i||, exact.
Rational k_norm(const FiniteCoalgebra& C, const BVector& alpha, const AlgebraDescriptor& alg);

struct BanachReport {
    long samples = 0;
    bool holds = true;
    Rational max_ratio{0};  // max ||a*b||_K / (||a||_K ||b||_K) over nonzero denominators
    std::string witness;
};

/// Submultiplicativity of ||.||_K on seeded random vectors plus targeted
/// sparse vectors that maximize a single structure constant.
BanachReport banach_norm_check(const FiniteCoalgebra& C, const AlgebraDescriptor& alg,
                               int samples, std::uint64_t seed);

struct GnReport {
    int n_max = 0;
    long samples = 0;
    bool bound_holds = true;
    bool paths_agree = true;
    Rational max_ratio{0};  // max p_inf(psi_1*...*psi_n) / (KM)^n
    std::string witness;
};

/// For n <= n_max and samples with q_inf <= 1, checks
/// p_inf(psi_1 * ... * psi_n) <= (KM)^n with M = 1, computing the n-fold
/// product both by repeated convolution and through the iterated coproduct.
GnReport gn_iterated_check(const FiniteCoalgebra& C, int n_max, int samples, std::uint64_t seed);

/// kappa(b (x) phi) = (x -> phi(x) b) as a B-vector; phi is given by its
/// values on the basis (a Hom(C, K) element).
BVector kappa(const FiniteCoalgebra& C, const Scalar& b, const std::vector<Rational>& phi);

struct KappaReport {
    bool unit_ok = true;
    bool multiplicative = true;
    bool bijective = true;
    std::string witness;
};

/// kappa(1_B (x) eps) = unit, multiplicativity on a grid of elementary
/// tensors (sample scalars x dual basis), and linear bijectivity over K.
KappaReport kappa_check(const FiniteCoalgebra& C, const AlgebraDescriptor& alg);

/// Graded Hopf algebra from structure constants (the JSON-loadable instance).
/// Product/unit/antipode are optional: instances without a product still
/// serve as coalgebras for the finite-dimensional checks.
class FiniteDimHopf final : public HopfInstance {
  public:
    struct Data {
        FiniteCoalgebra coalgebra;
        std::vector<Degree> degrees;                                       // per basis index
        std::vector<std::vector<std::tuple<int, int, Rational>>> product;  // [i]: e_i*e_j terms keyed (j,k,c)
        bool has_product = false;
        int unit_index = -1;
        std::vector<std::vector<Rational>> antipode;  // rows: S(e_i) = sum_j antipode[i][j] e_j
        bool has_antipode = false;
    };

    explicit FiniteDimHopf(Data data);

    std::string name() const override { return data_.coalgebra.name; }
    std::string unit_id() const override;
    Degree degree_of(const std::string& id) const override;
    std::vector<std::string> basis_of_degree(const Degree& d) const override;
    std::vector<Degree> degrees_up_to(const Degree& cutoff) const override;
    LinComb product(const std::string& a, const std::string& b) const override;
    TensorSum coproduct(const std::string& id) const override;
    Rational counit(const std::string& id) const override;

    const FiniteCoalgebra& coalgebra() const { return data_.coalgebra; }
    bool has_product() const { return data_.has_product; }
    int index_of(const std::string& id) const;

  protected:
    std::optional<LinComb> supplied_antipode(const std::string& id) const override;

  private:
    Data data_;
    std::map<std::string, int> index_;
};

/// The tensor Hopf algebra H (x) H with the tensor grading
/// (H (x) H)_n = sum_{i+j=n} H_i (x) H_j; ids are "a<sep>b".
class TensorSquareInstance final : public HopfInstance {
  public:
    explicit TensorSquareInstance(HopfPtr base);

    static constexpr const char* kSep = "(x)";

    const HopfPtr& base() const { return base_; }
    std::pair<std::string, std::string> split(const std::string& id) const;
    std::string join(const std::string& a, const std::string& b) const;

    std::string name() const override { return "tensor:" + base_->name(); }
    std::string unit_id() const override;
    Degree degree_of(const std::string& id) const override;
    std::vector<std::string> basis_of_degree(const Degree& d) const override;
    std::vector<Degree> degrees_up_to(const Degree& cutoff) const override;
    LinComb product(const std::string& a, const std::string& b) const override;
    TensorSum coproduct(const std::string& id) const override;
    Rational counit(const std::string& id) const override;

  protected:
    std::optional<LinComb> supplied_antipode(const std::string& id) const override;

  private:
    HopfPtr base_;
};

std::shared_ptr<const TensorSquareInstance> tensor_square(HopfPtr base);

/// (m_H)^*(phi)(a (x) b) = phi(ab).
TruncatedFunctional precompose_mult(const std::shared_ptr<const TensorSquareInstance>& HH,
                                    const TruncatedFunctional& phi);

/// beta(phi, psi)(a (x) b) = phi(a) psi(b).
TruncatedFunctional beta(const std::shared_ptr<const TensorSquareInstance>& HH,
                         const TruncatedFunctional& phi, const TruncatedFunctional& psi);

struct MultifaltReport {
    long samples = 0;
    bool product_identity = true;   // (p1<>q1)*(p2<>q2) = (p1*p2)<>(q1*q2)
    bool convolution_identity = true;  // convolve = beta after coproduct
    std::string witness;
};

/// Checks the tensor-product identity on sampled quadruples of functionals
/// and re-derives convolution as beta composed with the coproduct.
MultifaltReport multifalt_check(const std::shared_ptr<const TensorSquareInstance>& HH,
                                const std::vector<std::array<TruncatedFunctional, 4>>& quads);

struct ExpEquivalenceSample {
    bool p1 = false;  // is_infinitesimal(phi)
    bool p2 = false;  // precompose_mult(exp phi) == beta(exp phi, exp phi)
    bool p3 = false;  // is_character(exp phi)
};

struct ExpEquivalenceReport {
    std::vector<ExpEquivalenceSample> samples;
    bool pattern_holds = true;      // P1 => (P2 and P3), and P2 <=> P3
    bool connected_equiv = true;    // P1 <=> P3 (asserted on connected instances)
};

/// Evaluates P1/P2/P3 for each sample (each phi must vanish on degree 0) and
/// checks the implication pattern; connected_equiv additionally asserts the
/// global bijection pattern of connected instances.
ExpEquivalenceReport exp_character_equivalence(
    const std::shared_ptr<const TensorSquareInstance>& HH,
    const std::vector<TruncatedFunctional>& phis, bool assert_connected_equiv);

}  // namespace hopfchar
