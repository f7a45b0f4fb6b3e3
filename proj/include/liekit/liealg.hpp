#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liekit/linalg.hpp"
#include "liekit/polynomial.hpp"
#include "liekit/rational.hpp"
#include "liekit/rootsys.hpp"

namespace liekit {

// Sorted (index, value) pairs without zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

QVec dense(const SparseVec& v, std::size_t n);
SparseVec sparse(const QVec& v);

// Finite-dimensional Lie algebra over Q by structure constants [e_i, e_j] = sum_k c_ij^k e_k.
// Antisymmetry and the Jacobi identity are checked on construction.
class LieAlgebra {
public:
    struct Bracket {
        std::size_t i, j;
        SparseVec value;
    };

    // Omitted pairs are zero; a pair may be given in either order, not both.
    LieAlgebra(std::vector<std::string> labels, const std::vector<Bracket>& brackets,
               std::vector<std::size_t> cartan = {});

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::size_t>& cartan() const { return cartan_; }
    bool has_cartan() const { return !cartan_.empty(); }

    const SparseVec& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    QVec bracket(const QVec& x, const QVec& y) const;
    // Matrix of ad e_i in the basis: column j is [e_i, e_j].
    QMatrix ad(std::size_t i) const;

    // Matrices of the defining representation, when built from matrices.
    const std::vector<QMatrix>& matrices() const { return matrices_; }
    void set_matrices(std::vector<QMatrix> m) { matrices_ = std::move(m); }

    // Nonzero c_uw^m with u < w, grouped by m.
    const std::vector<std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>>>& by_target() const
    {
        return by_target_;
    }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.table_ == b.table_; }

private:
    std::vector<std::string> labels_;
    std::vector<SparseVec> table_;
    std::vector<std::size_t> cartan_;
    std::vector<QMatrix> matrices_;
    std::vector<std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>>> by_target_;
};

// Closed span of matrices under commutators; throws DimensionMismatch if not closed.
LieAlgebra from_matrices(std::vector<std::string> labels, std::vector<QMatrix> basis);

LieAlgebra sl(int n);
// Split so(n): X^T J + J X = 0 with J the antidiagonal ones matrix.
LieAlgebra so(int n);
// sp(2n): X^T J + J X = 0 with J = ((0, I), (-I, 0)).
LieAlgebra sp(int two_n);
LieAlgebra gl(int n);
LieAlgebra heisenberg();
LieAlgebra upper_triangular(int n);
LieAlgebra strictly_upper_triangular(int n);
LieAlgebra abelian(int n);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
// Same algebra in the basis f_j = sum_i p(i, j) e_i.
LieAlgebra change_basis(const LieAlgebra& g, const QMatrix& p);

// JSON structure constants: {"dim", "basis", "brackets": [{"i","j","coeffs":{"k":"p/q"}}], "cartan"}.
LieAlgebra lie_algebra_from_json(const std::string& text);
LieAlgebra lie_algebra_from_file(const std::string& path);
std::string lie_algebra_to_json(const LieAlgebra& g);

struct LieModule {
    std::size_t dim = 0;
    std::vector<QMatrix> action; // one dim x dim matrix per basis element of g
};

// Checks rho([x,y]) = [rho x, rho y] on basis pairs; throws JacobiFailure otherwise
// and DimensionMismatch on wrong matrix shapes.
void validate_module(const LieAlgebra& g, const LieModule& m);
LieModule trivial_module(const LieAlgebra& g, std::size_t dim = 1);
LieModule adjoint_module(const LieAlgebra& g);
LieModule natural_module(const LieAlgebra& g);
// V_n for sl(2) in the basis of sl(2): e, f, h.
LieModule sl2_irrep(const LieAlgebra& sl2, int n);
// {"dim": d, "action": [matrix per basis element]}, matrices as rows of rational
// strings or integers. Validated against g.
LieModule lie_module_from_json(const LieAlgebra& g, const std::string& text);
LieModule lie_module_from_file(const LieAlgebra& g, const std::string& path);
// g + V with V abelian and [x, v] = rho(x) v.
LieAlgebra semidirect(const LieAlgebra& g, const LieModule& m);

QMatrix killing_form(const LieAlgebra& g);

// Dimensions D^0 = g, D^1, ... until stable (inclusive of the stable value once).
std::vector<std::size_t> derived_series(const LieAlgebra& g);
std::vector<std::size_t> lower_central_series(const LieAlgebra& g);
bool solvable_by_series(const LieAlgebra& g);
// K(g, [g, g]) = 0
bool solvable_by_cartan_criterion(const LieAlgebra& g);
// Both criteria; throws std::logic_error if they disagree.
bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
bool is_semisimple(const LieAlgebra& g);
// Semisimple with a one-dimensional commutant of the adjoint action.
bool is_simple(const LieAlgebra& g);

struct RootSpace {
    QVec functional; // values on the marked Cartan elements
    std::vector<std::size_t> basis;
};

struct RootDecomposition {
    std::size_t cartan_dim = 0;
    std::vector<RootSpace> roots;
};

// Throws NotDiagonalizable if the marked elements do not act diagonally on the basis.
RootDecomposition root_decomposition(const LieAlgebra& g);

struct RootMatch {
    CartanMatrix cartan;             // from the recovered simple roots and coroots
    std::vector<CartanType> types;
    std::vector<int> vertex_map;     // recovered simple root i -> vertex of the built-in type
    std::vector<IVec> root_coords;   // each recovered root in built-in simple-root coordinates
    bool bijective = false;          // root_coords is exactly the built-in root set
};

RootMatch match_root_system(const LieAlgebra& g, const RootDecomposition& rd);

constexpr std::size_t kDefaultCohomologyMaxDim = 20;

// dim H^k for k = 0..dim g; checks d^2 = 0. Throws TooLarge if dim g > max_dim.
std::vector<std::size_t> ce_cohomology(const LieAlgebra& g, const LieModule& m,
                                       std::size_t max_dim = kDefaultCohomologyMaxDim);
std::vector<std::size_t> ce_cohomology(const LieAlgebra& g, std::size_t max_dim = kDefaultCohomologyMaxDim);
IntPoly poincare_polynomial(const std::vector<std::size_t>& betti);

// Basis of 2-cocycles with trivial coefficients, as antisymmetric matrices.
std::vector<QMatrix> two_cocycles(const LieAlgebra& g);
// g + Q c with [x, y]' = [x, y] + omega(x, y) c.
LieAlgebra central_extension(const LieAlgebra& g, const QMatrix& omega);

// sum_k dim (Lambda^k g^*)^g q^k by invariance equations on the weight-zero forms.
IntPoly invariant_forms_poincare(const LieAlgebra& g, std::size_t max_dim = kDefaultCohomologyMaxDim);
std::size_t invariant_forms_dim(const LieAlgebra& g, int degree, std::size_t max_dim = kDefaultCohomologyMaxDim);

struct TripleProduct {
    std::size_t dim;
    bool simple; // the count is only meaningful for simple g
};
TripleProduct triple_product_invariant(const LieAlgebra& g, std::size_t max_dim = kDefaultCohomologyMaxDim);

} // namespace liekit
