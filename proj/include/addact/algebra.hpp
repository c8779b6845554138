#pragma once

#include <optional>
#include <string>
#include <vector>

#include "addact/groebner.hpp"
#include "addact/matrix.hpp"
#include "addact/multipoly.hpp"

namespace addact {

// Finite-dimensional commutative associative unital algebra over Q, stored by
// structure constants on a fixed basis.  Elements are plain coefficient
// vectors of length dim().
class Algebra {
public:
    Algebra() = default;
    Algebra(std::vector<std::string> basis_labels,
            std::vector<std::vector<std::vector<Q>>> structure, std::vector<Q> unit);

    size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::vector<Q>& unit() const { return unit_; }
    const std::vector<std::vector<std::vector<Q>>>& structure() const { return structure_; }

    std::vector<Q> multiply(const std::vector<Q>& x, const std::vector<Q>& y) const;
    QMatrix mult_operator(const std::vector<Q>& x) const;
    std::vector<Q> power(const std::vector<Q>& x, unsigned k) const;
    std::vector<Q> basis_element(size_t i) const;

    // Commutativity, associativity, unit axioms, checked exactly.
    bool validate() const;

    bool is_nilpotent(const std::vector<Q>& x) const;

    // Truncated series; both demand a nilpotent argument.
    std::vector<Q> exp_nilpotent(const std::vector<Q>& z) const;
    std::vector<Q> log_one_plus(const std::vector<Q>& z) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<std::vector<Q>>> structure_;
    std::vector<Q> unit_;
};

// Product in A tensor K[x_1..x_nvars]; elements are length-dim() vectors of
// polynomial coefficients along the algebra basis.
std::vector<MultiPoly> tensor_multiply(const Algebra& a, const std::vector<MultiPoly>& x,
                                       const std::vector<MultiPoly>& y, size_t nvars);

// Quotient K[S_1..S_n]/I on its standard-monomial basis.  Kept alongside the
// algebra so ideals and representative polynomials stay available.
struct QuotientPresentation {
    size_t nvars = 0;
    GroebnerBasis gb;
    std::vector<Expo> basis_monomials;
    Algebra algebra;

    MultiPoly lift(const std::vector<Q>& element) const;       // representative polynomial
    std::vector<Q> project(const MultiPoly& f) const;          // normal form coordinates
};

// Build the quotient algebra.  The ideal must have finite codimension
// (NOT_FINITE_CODIMENSION); the whole ring collapsing to zero is
// DEGENERATE_INPUT.  Basis: standard monomials, unit first.  With
// require_origin_support the ideal must also contain a power of every
// variable (NOT_SUPPORTED_AT_ORIGIN); pass false to build split algebras
// like K[S]/(S^2-1) for decomposition experiments.
QuotientPresentation quotient_presentation(size_t nvars, std::vector<MultiPoly> gens,
                                           MonoOrder order = MonoOrder::GrLex,
                                           unsigned degree_cap = kDefaultDegreeCap,
                                           size_t dim_cap = 4096,
                                           bool require_origin_support = true);

Algebra from_presentation(size_t nvars, std::vector<MultiPoly> gens);

// The codimension-1 subspace of nilpotents of a local algebra; NOT_LOCAL
// otherwise.  Locality here always means a rational residue field; a field
// extension like Q[x]/(x^2+1) is rejected with the same error.
Subspace maximal_ideal(const Algebra& a);

struct LocalBlock {
    std::vector<std::vector<Q>> embedding;  // block basis in ambient coordinates
    Algebra algebra;
};

// Split into local ideals by generalized eigenspaces of multiplication
// operators.  IRRATIONAL_SPLITTING when a required eigenvalue is not rational.
std::vector<LocalBlock> local_blocks(const Algebra& a);
std::vector<Algebra> local_decomposition(const Algebra& a);

struct AlgebraInvariants {
    size_t dim = 0;
    bool is_local = false;
    std::vector<size_t> hilbert_samuel;  // r_i = dim J^i - dim J^{i+1}
    size_t socle_dim = 0;
    bool is_gorenstein = false;
    size_t nilpotency_index = 0;  // least l with J^l = 0
    size_t num_maximal_ideals = 0;

    bool operator==(const AlgebraInvariants& other) const = default;
};

// Radical powers as subspaces, J^0 = A down to the first zero power.
std::vector<Subspace> radical_chain(const Algebra& a);

Subspace socle(const Algebra& a);

AlgebraInvariants invariants(const Algebra& a);

// Orbit count of the induced action on the projectivization of A, when
// finite; nullopt encodes INFINITE.  Finite exactly when every local summand
// is a truncated polynomial algebra in one variable.
std::optional<Z> orbit_count_projective(const Algebra& a);

// Search for v whose span under the unital algebra generated by the matrices
// is everything.  Exact when all matrices are nilpotent; otherwise a
// certified search that may miss (returns nullopt without a disproof).
std::optional<std::vector<Q>> cyclic_vector(const std::vector<QMatrix>& matrices);

// m - dim(sum of images); the corank of the span's action.
size_t kravchuk_number(const std::vector<QMatrix>& matrices);

}  // namespace addact
