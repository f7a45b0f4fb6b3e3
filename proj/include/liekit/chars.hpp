#pragma once

#include <map>
#include <string>
#include <vector>

#include "liekit/polynomial.hpp"
#include "liekit/rootsys.hpp"
#include "liekit/weyl.hpp"

namespace liekit {

constexpr std::size_t kDefaultMaxDim = 1'000'000;
constexpr std::size_t kDefaultMaxProductDim = 100'000'000;

// Memoized Kostant partition function over a box in Q_+ that grows on demand.
// Not thread-safe; keep one per worker.
class KostantTable {
public:
    explicit KostantTable(const RootSystem& rs) : rs_(&rs) {}

    // Number of ways to write beta (simple-root coordinates) as a sum of positive roots.
    Integer operator()(const IVec& beta);
    // Make sure every beta <= bound is tabulated.
    void reserve(const IVec& bound);

private:
    void rebuild(const IVec& bound);

    const RootSystem* rs_;
    IVec box_;
    std::vector<Integer> table_;
};

Integer kostant_p(const RootSystem& rs, const IVec& beta);

// Sparse weight -> multiplicity map in fundamental coordinates.
struct FormalCharacter {
    std::map<IVec, Integer> terms;

    Integer dimension() const;
    Integer multiplicity(const IVec& weight) const;
    friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;
};

FormalCharacter multiply(const FormalCharacter& a, const FormalCharacter& b);

bool is_dominant(const IVec& weight);
void require_dominant(const RootSystem& rs, const IVec& weight);

// Dominant mu with lambda - mu in Q_+, sorted by depth below lambda then lexicographically.
std::vector<IVec> dominant_weights_below(const RootSystem& rs, const IVec& lambda);

// Multiplicities of all dominant weights of L_lambda, by the Kostant formula.
std::map<IVec, Integer> dominant_multiplicities(const RootSystem& rs, const IVec& lambda);

Integer weight_multiplicity(const RootSystem& rs, const IVec& lambda, const IVec& gamma);

FormalCharacter character(const RootSystem& rs, const IVec& lambda, std::size_t max_dim = kDefaultMaxDim);

// Weyl dimension formula.
Integer dimension(const RootSystem& rs, const IVec& lambda);

// prod_{alpha>0} (1 - q^{(alpha, lambda+rho)}) / (1 - q^{(alpha, rho)}) with the
// smallest symmetrizer; sl2 with highest weight n gives 1 + q + ... + q^n.
IntPoly q_dimension(const RootSystem& rs, const IVec& lambda);

using Decomposition = std::map<IVec, Integer>;

// Multiply characters, then repeatedly peel off the highest remaining dominant weight.
Decomposition tensor_decompose(const RootSystem& rs, const IVec& lambda, const IVec& mu,
                               std::size_t max_product_dim = kDefaultMaxProductDim);
// Sum over the weights gamma of L_mu of sign * L_{dom(lambda+gamma+rho)-rho}.
Decomposition tensor_decompose_brauer(const RootSystem& rs, const IVec& lambda, const IVec& mu,
                                      std::size_t max_product_dim = kDefaultMaxProductDim);
// L_omega (x) L_lambda = sum over gamma in W omega of L_{lambda+gamma}; terms with
// lambda+gamma off the dominant cone have some coordinate -1 and cancel.
Decomposition tensor_minuscule(const RootSystem& rs, const IVec& omega, const IVec& lambda);

Integer decomposition_dimension(const RootSystem& rs, const Decomposition& d);

// -w0(lambda)
IVec dual_highest_weight(const RootSystem& rs, const IVec& lambda);

enum class FSType { Complex, Real, Quaternionic };
std::string to_string(FSType t);
FSType frobenius_schur_type(const RootSystem& rs, const IVec& lambda);
// <lambda, 2 rho^vee>
Integer two_rho_check_pairing(const RootSystem& rs, const IVec& lambda);

// (lambda, lambda + 2 rho) in the smallest-symmetrizer normalization.
Rational casimir_eigenvalue(const RootSystem& rs, const IVec& lambda);

// prod_{alpha>0} (1 - e^{-alpha}) * chi, keys are weights.
std::map<IVec, Integer> denominator_times(const RootSystem& rs, const FormalCharacter& chi);
// sum_w eps(w) e^{w(lambda+rho) - rho}; negative coefficients allowed.
std::map<IVec, Integer> alternating_sum(const RootSystem& rs, const IVec& lambda);

} // namespace liekit
