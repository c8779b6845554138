#pragma once

#include <vector>

#include "addact/algebra.hpp"
#include "addact/matrix.hpp"
#include "addact/multipoly.hpp"

namespace addact {

// A local algebra together with an ordered basis of a generating subspace
// U inside the maximal ideal.  Basis vectors are coordinates in the
// standard-monomial basis of the presentation, so the presentation must be
// supported at the origin (unit first, every other basis monomial nilpotent).
struct GaPair {
    QuotientPresentation qp;
    std::vector<std::vector<Q>> u_basis;

    size_t n() const { return u_basis.size(); }
    size_t m() const { return qp.algebra.dim(); }
};

// U = the whole maximal ideal, with its standard-monomial basis.
GaPair pair_with_maximal_ideal(QuotientPresentation qp);
GaPair pair_with_u(QuotientPresentation qp, std::vector<std::vector<Q>> u_basis);

// True iff the u-vectors are independent, lie in the maximal ideal, and
// generate the algebra over K.
bool validate_pair(const GaPair& p);

// Reduced Groebner basis of ker(K[S_1..S_n] -> A, S_i -> u_i).
GroebnerBasis ideal_from_pair(const GaPair& p, unsigned degree_cap = kDefaultDegreeCap);

// Same kernel for a bare algebra and spanning set, without the pair shape
// checks.  The basis must list the unit first; DEGENERATE_INPUT when the
// span fails to generate.
GroebnerBasis presentation_ideal(const Algebra& a, const std::vector<std::vector<Q>>& u,
                                 unsigned degree_cap = kDefaultDegreeCap);

// Finite-dimensional subspace of K[x_1..x_n], closed under all partial
// derivatives and containing the constants.  Basis is rref-canonical: each
// vector is monic at its pivot monomial, pivots ascend in the grading used
// by monomials_up_to, and no pivot monomial appears in another vector.
struct GeneratingSubspace {
    size_t nvars = 0;
    std::vector<MultiPoly> basis;

    size_t dim() const { return basis.size(); }
    bool basic() const { return basis.size() == nvars + 1; }
    bool operator==(const GeneratingSubspace& other) const = default;
};

// Coefficients of exp(x_1 u_1 + ... + x_n u_n) along the algebra basis,
// canonicalized.  Dimension always equals dim A.
GeneratingSubspace generating_subspace(const GaPair& p);

// The two halves of the ideal/subspace duality: V = orthogonal of I under
// the apolarity pairing, I = annihilator ideal of V.  Mutually inverse on
// origin-supported nondegenerate ideals and generating subspaces.
GeneratingSubspace v_from_ideal(const GroebnerBasis& gb);
GroebnerBasis ideal_from_v(const GeneratingSubspace& v,
                           unsigned degree_cap = kDefaultDegreeCap);

// Smallest derivative-closed subspace containing the seeds and constants.
// DEGENERATE_INPUT when some constant vector field annihilates the result.
GeneratingSubspace close_under_derivations(size_t nvars, const std::vector<MultiPoly>& seeds);

// Square matrix with polynomial entries in parameters a_1..a_n.
struct SymbolicMatrix {
    size_t size = 0;
    size_t nparams = 0;
    std::vector<std::vector<MultiPoly>> entries;

    QMatrix eval(const std::vector<Q>& point) const;
};

// Matrix of multiplication by exp(a_1 u_1 + ... + a_n u_n) on the
// standard-monomial basis.  Column 0 recovers the generating subspace.
SymbolicMatrix representation(const GaPair& p);

// Coordinates of exp(a_1 s_1 + ... + a_n s_n) * (z_0 + z_1 s_1 + ...) for a
// local algebra with U = m, written over the variables a_1..a_n, z_0..z_n
// (n = dim A - 1).  NOT_LOCAL otherwise.
std::vector<MultiPoly> projective_action(const Algebra& a);

// Fixed points of the translation action on P(A): the socle, projectivized.
Subspace fixed_locus(const Algebra& a);

// True iff some element's derivative closure spans all of v.  Certified
// both ways: a span witness on success, the socle-dimension criterion of
// the annihilator algebra on failure; disagreement is an internal error.
bool is_cyclic_module(const GeneratingSubspace& v);

// Exact check of the module duality between A and V: multiplying g by
// exp(beta . u) then pairing against f agrees with pairing g against the
// translate of f by beta.
bool duality_check(const GaPair& p, const std::vector<Q>& beta, const std::vector<Q>& g,
                   const MultiPoly& f);

}  // namespace addact
