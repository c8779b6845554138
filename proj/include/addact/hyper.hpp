#pragma once

#include "addact/ht.hpp"

namespace addact {

// A pair (A, U) whose subspace has codimension one inside the maximal ideal,
// extended by the data that pins its hypersurface equation down: the degree
// d = max{k : m^k not contained in U}, a complement vector S spanning m^d
// over U, and the functional pi on A with pi(1) = 0, pi(U) = 0, pi(S) = 1.
struct HPair {
    GaPair pair;
    std::vector<Q> complement;
    std::vector<Q> pi;
    size_t degree = 0;
};

// Validates the pair and derives degree, complement and pi.  The complement
// is the first reduced-basis vector of m^degree outside U, so the whole
// structure is canonical given the pair.  DEGENERATE_INPUT unless U
// generates A and has codimension one in m.
HPair make_h_pair(const GaPair& p);

// Homogeneous polynomial of the projective hypersurface closure, in the
// coordinates z_0..z_{n+1} along the basis (1, u_1..u_n, complement).  The
// monomial z_0^{degree-1} z_{n+1} always enters with coefficient 1, and
// z_{n+1} appears nowhere else.
struct HomogEquation {
    size_t degree = 0;
    MultiPoly poly;
};

HomogEquation equation(const HPair& h);

// Equations cutting exp(U) out of the unit chart 1 + m, for a generating
// pair of any codimension.  Polynomial variable k is the coordinate z_{k+1}
// along the basis of m listing u_1..u_n first and then a canonical
// complement drawn from the radical powers, deepest power scanned first but
// listed in ascending order.  One equation per complement direction; U = m
// gives none.
std::vector<MultiPoly> chart_equations(const GaPair& p);

// The symmetric multilinear form attached to an H-pair: on arguments that
// are each either the unit or nilpotent,
//   F(1^k, w_1, .., w_{d-k}) = (-1)^k k! (d-k-1)! pi(w_1 ... w_{d-k}),
// extended multilinearly, with F(1,..,1) = 0.
struct InvariantForm {
    size_t degree = 0;
    Algebra algebra;
    std::vector<Q> pi;

    // args are coefficient vectors in the algebra basis; exactly degree many.
    Q value(const std::vector<std::vector<Q>>& args) const;
};

InvariantForm invariant_form(const HPair& h);

// Kernel of the form, computed by contracting all but one slot against basis
// tuples.  Always equals the largest ideal of A contained in U; both are
// computed and compared, Internal error on disagreement.
Subspace form_kernel(const HPair& h);

bool is_nondegenerate(const HPair& h);

// Quotient pair (A/ker F, U/ker F), re-presented on standard monomials.
// Keeps the degree and is always non-degenerate; the equation of the input
// is the equation of the quotient with unused cone coordinates inserted.
HPair reduce(const HPair& h);

// Direct-sum test: A Gorenstein, Soc A = m^degree, and m = U + m^degree.
// Agrees with is_nondegenerate.
bool gorenstein_certificate(const HPair& h);

// The pair whose hypersurface is the smooth n-dimensional quadric.
HPair quadric_pair(size_t n);

// Rank of the symmetric matrix of a degree-2 equation; NOT_QUADRATIC else.
size_t quadratic_rank(const HomogEquation& e);

// Boundary criterion for the direction z: true exactly when z^degree lies
// in U.  Pre: z in m.
bool boundary_test(const HPair& h, const std::vector<Q>& z);

}  // namespace addact
