#pragma once

#include <string>
#include <variant>
#include <vector>

#include "addact/hyper.hpp"
#include "addact/polytope.hpp"

namespace addact {

// A quotient of a polynomial ring by the listed generators, kept in printed
// form so catalogs and documents stay readable.  nvars = 0 with no
// generators denotes the ground field itself.
struct Presentation {
    size_t nvars = 0;
    std::vector<std::string> generators;

    bool operator==(const Presentation& other) const = default;
};

struct ExpectedInvariants {
    size_t dim = 0;
    std::vector<size_t> hilbert_samuel;
    bool gorenstein = false;

    bool operator==(const ExpectedInvariants& other) const = default;
};

struct CatalogEntry {
    size_t id = 0;
    Presentation presentation;
    ExpectedInvariants expected;
};

// The classification of local algebras of dimension at most 6: 42 entries,
// ids 1..42, grouped by dimension (1, 1, 2, 4, 9, 25 per dimension).
const std::vector<CatalogEntry>& table1();

// Parse the generators and build the quotient algebra on its
// standard-monomial basis.  Variable tokens may use either the x or the S
// stem; generators must all use the same one.
QuotientPresentation realize(const Presentation& p,
                             unsigned degree_cap = kDefaultDegreeCap);

using Fixture = std::variant<Fan, LatticePolytope, GaPair, HPair>;

// Embedded fixtures addressable by name:
//   "P2"                  projective plane fan
//   "P1xP1"               product of two lines
//   "Fd:<d>"              Hirzebruch surface, d >= 0
//   "dP6"                 del Pezzo surface of degree 6
//   "wps:<w0,w1,...>"     weighted projective space
//   "hyp-no30"            catalog entry 30 with U = <x1,x2,x3,x3^2>
//   "quadric:<n>"         the pair of the smooth n-dimensional quadric
//   "twisted-cubic-pair"  K[S]/(S^4) with U = <S>
// Anything else is UNKNOWN_FIXTURE.
Fixture named_fixture(const std::string& name);

}  // namespace addact
