#pragma once

#include <vector>

#include "addact/multipoly.hpp"

namespace addact {

inline constexpr unsigned kDefaultDegreeCap = 64;

struct GroebnerBasis {
    MonoOrder order = MonoOrder::GrLex;
    // Monic, auto-reduced, sorted descending by leading monomial.
    std::vector<MultiPoly> gens;

    size_t nvars() const { return gens.empty() ? 0 : gens.front().nvars(); }
    bool operator==(const GroebnerBasis& other) const = default;
};

// Reduced basis via Buchberger with normal pair selection.  Degrees of new
// basis elements above `degree_cap` abort with DEGREE_BLOWUP.
GroebnerBasis groebner(std::vector<MultiPoly> gens, MonoOrder order = MonoOrder::GrLex,
                       unsigned degree_cap = kDefaultDegreeCap);

// Remainder of full multivariate division: no term divisible by any leading
// term survives.  Zero iff f lies in the ideal.
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb);

bool ideal_contains(const GroebnerBasis& gb, const MultiPoly& f);

// All monomials outside the leading-term ideal, listed by ascending total
// degree and descending lexicographic order within a degree (so 1, S1, S2, ...
// matching the quotient bases used throughout).  More than `cap` of them
// raises NOT_FINITE_CODIMENSION.
std::vector<Expo> standard_monomials(const GroebnerBasis& gb, size_t cap);

// Irredundant generating subset of the basis: elements lying in the ideal of
// the others are discarded, smallest leading term first.
std::vector<MultiPoly> minimal_generators(const GroebnerBasis& gb);

}  // namespace addact
