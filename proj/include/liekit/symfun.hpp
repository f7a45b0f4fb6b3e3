#pragma once

#include <map>
#include <string>
#include <vector>

#include "liekit/polynomial.hpp"
#include "liekit/rational.hpp"

namespace liekit {

// Weakly decreasing positive parts; the empty partition is {}.
using Partition = std::vector<int>;

// Drops trailing zeros; throws NotPartition if the parts increase or go negative.
Partition make_partition(std::vector<int> parts);
int size(const Partition& p);
Partition conjugate(const Partition& p);
std::string partition_string(const Partition& p);

// Content of the box in row i, column j is j - i (0-based here, same differences).
// Box sum and the closed form sum_i lambda_i (lambda_i - 2i + 1) / 2 (1-based i).
long content(const Partition& p);
long content_formula(const Partition& p);
// Eigenvalue of the sum of all transpositions on pi_lambda.
inline long jucys_murphy_eigenvalue(const Partition& p) { return content(p); }

// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions(int n);

// Integer polynomial in nvars variables keyed by exponent vectors.
struct SparsePoly {
    std::size_t nvars = 0;
    std::map<IVec, Integer> terms;

    void add(const IVec& exps, const Integer& c);
    Integer eval(const std::vector<Integer>& x) const;
    bool is_symmetric() const;
    std::string to_string() const;

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;
};

SparsePoly complete_symmetric(int m, std::size_t n);
SparsePoly elementary_symmetric(int m, std::size_t n);

// s_lambda(x_1..x_n) through the sl_n character: lambda maps to the dominant weight
// with fundamental coordinates lambda_i - lambda_{i+1}. Zero if lambda has > n parts.
SparsePoly schur_poly(const Partition& lambda, std::size_t n);
// det(x_i^{lambda_j + n - j}) / Vandermonde at distinct integer points.
Integer schur_bialternant(const Partition& lambda, const std::vector<Integer>& points);

// dim S^lambda C^N by the Weyl product, and the same as a polynomial in N.
Integer schur_dim(const Partition& lambda, int n);
RatPoly schur_dim_poly(const Partition& lambda);
// (1/n) C(n, k) C(n, k - 1)
Integer narayana(int n, int k);

// m[i] = number of cycles of length i + 1.
using CycleType = std::vector<int>;
CycleType cycle_type(const Partition& mu);
Integer centralizer_order(const CycleType& m);
int cycle_sign(const CycleType& m);

// Coefficient of x^{lambda + delta} in Vandermonde * prod_i p_i^{m_i}, in nvars
// variables (0 means |lambda|). Throws SizeMismatch if |lambda| != sum i m_i.
Integer frobenius_character(const Partition& lambda, const CycleType& m, std::size_t nvars = 0);

// Partitions from lambda by adding m boxes in distinct rows, with at most
// max_parts rows (0 = unbounded). m = 1 is the single addable box rule.
std::vector<Partition> pieri(const Partition& lambda, int m = 1, std::size_t max_parts = 0);

IntPoly q_factorial(int n);
// Partitions in an m x n box, by DP, and as [m+n]! / ([m]! [n]!).
IntPoly gaussian_binomial(int m, int n);
IntPoly gaussian_binomial_ratio(int m, int n);
// [n choose k]_q
IntPoly q_binomial(int n, int k);
IntPoly gaussian_multinomial(const std::vector<int>& parts);

// Betti numbers b_0..b_{2d}; odd ones vanish.
std::vector<Integer> betti_from_poincare(const IntPoly& p);
IntPoly grassmannian_poincare(int m, int n); // Gr(m, C^{m+n})
IntPoly flag_poincare(int n);
IntPoly partial_flag_poincare(const std::vector<int>& dims);

// sum_{|lambda| <= d} s_lambda(x) s_lambda(y) == prod 1/(1 - x_i y_j) up to degree d.
// Throws TooLarge beyond r, s <= 6 and d <= 12.
bool cauchy_check(std::size_t r, std::size_t s, int d);

} // namespace liekit
