#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "liekit/linalg.hpp"
#include "liekit/rational.hpp"

namespace liekit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
    Family family;
    int rank;

    std::string name() const;
    friend bool operator==(const CartanType&, const CartanType&) = default;
};

// "E8" -> (E,8); "B3xG2" -> [(B,3),(G,2)]. Throws ParseError / UnsupportedType.
std::vector<CartanType> parse_cartan_types(std::string_view text);
std::string type_string(const std::vector<CartanType>& types);

// Square integer matrix with a_ij = <alpha_i^vee, alpha_j>, 0-based indices.
// Construction only checks shape; validate_cartan checks the axioms.
class CartanMatrix {
public:
    CartanMatrix() = default;
    explicit CartanMatrix(IMatrix entries);
    static CartanMatrix from_rows(const std::vector<std::vector<int64_t>>& rows);

    int rank() const { return static_cast<int>(m_.rows()); }
    int64_t operator()(int i, int j) const { return m_(i, j); }
    const IMatrix& matrix() const { return m_; }
    CartanMatrix transpose() const { return CartanMatrix(m_.transpose()); }

    friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

private:
    IMatrix m_;
};

// Built-in numbering: A chain 1..r; B_r with vertex r short (a_{r,r-1} = -2); C_r the
// transpose; D_r with r-1 and r both joined to r-2; G2 = ((2,-1),(-3,2)); F4 with
// 1,2 short and a_23 = -2; E8 with 1-3, 2-4 and the chain 3-4-5-6-7-8; E7 and E6 are
// the leading principal submatrices of E8.
CartanMatrix cartan_matrix(CartanType type);
CartanMatrix cartan_matrix(const std::vector<CartanType>& types);

struct CartanComponent {
    CartanType type;
    std::vector<int> vertices; // 0-based, ascending
    IVec d;                    // smallest symmetrizer, parallel to vertices
};

// Checks every Cartan-matrix axiom and returns the connected Dynkin types in order
// of their smallest vertex. Throws NotCartan with the violated condition.
std::vector<CartanComponent> decompose_cartan(const IMatrix& entries);
std::vector<CartanType> validate_cartan(const IMatrix& entries);

// Vertex permutation p with b(p[i], p[j]) == a(i, j), if one exists.
std::optional<std::vector<int>> cartan_isomorphism(const CartanMatrix& a, const CartanMatrix& b);

struct IVecHash {
    std::size_t operator()(const IVec& v) const noexcept;
};

using RootSet = std::unordered_set<IVec, IVecHash>;

// Either simple-root coordinates (roots, root-lattice points) or fundamental-weight
// coordinates (weights). Both are exact rationals for the pairing.
struct LatticeVector {
    enum class Basis { Root, Weight };
    Basis basis;
    QVec coords;

    static LatticeVector root(const IVec& n) { return {Basis::Root, to_qvec(n)}; }
    static LatticeVector weight(const IVec& w) { return {Basis::Weight, to_qvec(w)}; }
    static LatticeVector weight(QVec w) { return {Basis::Weight, std::move(w)}; }
};

// A reduced root system given by a valid Cartan matrix. Immutable once built.
class RootSystem {
public:
    static RootSystem build(CartanType type);
    static RootSystem build(const std::vector<CartanType>& types);
    static RootSystem build(const CartanMatrix& cartan);
    static RootSystem build(std::string_view type_string);

    int rank() const { return cartan_.rank(); }
    const CartanMatrix& cartan() const { return cartan_; }
    // Smallest positive integer vector with d_i a_ij = d_j a_ji (per component).
    const IVec& symmetrizer() const { return d_; }
    const std::vector<CartanComponent>& components() const { return components_; }
    bool is_irreducible() const { return components_.size() == 1; }
    std::string type_name() const;

    // Sorted by height, then lexicographically.
    const std::vector<IVec>& positive_roots() const { return positive_; }
    // Positive roots followed by their negatives.
    std::vector<IVec> roots() const;
    std::size_t num_roots() const { return 2 * positive_.size(); }
    bool is_root(const IVec& coords) const { return all_.count(coords) > 0; }

    static int64_t height(const IVec& root);

    // Simple-root coordinates -> fundamental-weight coordinates (multiplication by A).
    IVec root_to_weight(const IVec& n) const;
    // Fundamental-weight coordinates -> simple-root coordinates (A^{-1}).
    QVec weight_to_root(const QVec& w) const;
    const QMatrix& cartan_inverse() const { return inverse_; }

    // (alpha_i, alpha_j) = d_i a_ij extended bilinearly.
    Rational pairing(const LatticeVector& x, const LatticeVector& y) const;
    // <lambda, alpha^vee> for a weight and a root (simple-root coordinates).
    Rational coroot_pairing(const QVec& weight, const IVec& root) const;
    int64_t coroot_pairing(const IVec& weight, const IVec& root) const;
    // Coordinates of alpha^vee in the simple-coroot basis.
    QVec coroot(const IVec& root) const;
    // (alpha, alpha) / 2 in units of the symmetrizer: d_i for a simple root.
    Rational half_norm(const IVec& root) const;

    // Simple reflection s_i on weights (fundamental coordinates) and on roots.
    IVec reflect_weight(int i, IVec w) const;
    QVec reflect_weight(int i, QVec w) const;
    IVec reflect_root(int i, IVec n) const;

private:
    RootSystem() = default;
    void generate();

    CartanMatrix cartan_;
    IVec d_;
    std::vector<CartanComponent> components_;
    std::vector<IVec> positive_;
    RootSet all_;
    QMatrix inverse_;
};

struct HighestRoot {
    IVec coords;
    int64_t height;
};

HighestRoot highest_root(const RootSystem& rs);
std::vector<int> exponents(const RootSystem& rs);
// Number of positive roots of each height 1, 2, ...
std::vector<std::size_t> height_census(const RootSystem& rs);
std::pair<int64_t, int64_t> coxeter_numbers(const RootSystem& rs);

// rho = sum of fundamental weights: all ones.
IVec rho(const RootSystem& rs);
// rho^vee in the simple-coroot basis: <alpha_j, rho^vee> = 1 for all j.
QVec rho_check(const RootSystem& rs);

// Dominant minuscule weights including 0; count equals det A.
std::vector<IVec> minuscule_weights(const RootSystem& rs);
bool is_minuscule(const RootSystem& rs, const IVec& weight);

// Elementary divisors > 1 of the Cartan matrix: P/Q = prod Z/n_k. Empty = trivial.
std::vector<Integer> weight_lattice_quotient(const RootSystem& rs);
Integer cartan_determinant(const RootSystem& rs);

RootSystem dual_root_system(const RootSystem& rs);

Rational pairing(const RootSystem& rs, const LatticeVector& x, const LatticeVector& y);

// Requires is_irreducible(); throws Reducible otherwise.
void require_irreducible(const RootSystem& rs, const char* what);

} // namespace liekit
