#pragma once

#include <optional>
#include <vector>

#include "addact/toric.hpp"

namespace addact {

// Full-dimensional lattice polytope given by its extreme points.  Every
// operation validates that the listed vertices really are the hull's
// vertices before doing anything else.
struct LatticePolytope {
    size_t rank = 0;
    std::vector<std::vector<Z>> vertices;
    bool operator==(const LatticePolytope&) const = default;
};

// One inequality <normal, x> <= bound with a primitive integer normal.
struct FacetIneq {
    std::vector<Z> normal;
    Z bound = 0;
    bool operator==(const FacetIneq&) const = default;
};

struct FacetSystem {
    std::vector<FacetIneq> inequalities;
    bool operator==(const FacetSystem&) const = default;
};

// Bounded very-ampleness probe.  Violations beyond the scanned box cannot be
// ruled out, so the check never claims falsity: it either verifies up to the
// bound, proposes the dilation factor that is always sufficient, or reports
// that the bound was too small to inspect the vertex cones.
struct AmpleReport {
    enum class Status { Verified, DilateHint, Inconclusive };
    Status status = Status::Inconclusive;
    unsigned dilate_factor = 0;  // set when status == DilateHint
    bool operator==(const AmpleReport&) const = default;
};

// Irredundant facet inequalities, sorted by normal then bound.
FacetSystem facets(const LatticePolytope& p);

// Inner-normal fan: one maximal cone per vertex, spanned by the negated
// normals of the facets through it.  The result is a valid complete fan.
Fan normal_fan(const LatticePolytope& p);

// First vertex whose primitive edge directions form a lattice basis such
// that every facet avoiding the vertex pairs nonnegatively with each edge
// direction; empty when no vertex qualifies.
std::optional<std::vector<Z>> inscribed_in_rectangle(const LatticePolytope& p);

AmpleReport very_ample_bounded(const LatticePolytope& p, const Z& search_bound);

// All integer points of the polytope, first coordinate varying fastest.
std::vector<std::vector<Z>> lattice_points(const LatticePolytope& p);

}  // namespace addact
