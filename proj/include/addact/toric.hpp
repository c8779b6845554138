#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "addact/matrix.hpp"
#include "addact/multipoly.hpp"

namespace addact {

// A rational fan given by primitive ray generators and its maximal cones,
// each listed as a set of ray indices; faces are implied.  Input is expected
// to be simplicial.  A non-simplicial maximal cone is accepted as long as
// every listed ray is an extremal generator of it.
struct Fan {
    size_t rank = 0;
    std::vector<std::vector<Z>> rays;
    std::vector<std::vector<size_t>> max_cones;

    bool operator==(const Fan&) const = default;
};

struct FanReport {
    bool is_valid = false;
    bool is_complete = false;
    bool is_smooth = false;
};

// Lattice vector e together with the one ray pairing to -1; all other rays
// of the ambient fan pair nonnegatively with e.
struct DemazureRoot {
    std::vector<Z> e;
    size_t distinguished_ray = 0;

    bool operator==(const DemazureRoot&) const = default;
};

// Roots e_1..e_n with <p_i, e_j> = -delta_ij over a lattice basis of rays.
// roots[j] is the root whose distinguished ray is basis_rays[j].
struct CompleteCollection {
    std::vector<size_t> basis_rays;
    std::vector<DemazureRoot> roots;

    bool operator==(const CompleteCollection&) const = default;
};

struct ClassGroup {
    size_t free_rank = 0;
    std::vector<Z> torsion;  // invariant factors > 1, in divisibility order

    bool operator==(const ClassGroup&) const = default;
};

// Divisor class group of the fan together with the grading it induces on the
// polynomial ring with one variable per ray.  Each degree lists the free
// coordinates first (canonicalized through the Hermite form of the degree
// block, so equal fans print equal data), then one residue in [0, d) per
// torsion factor d.
struct CoxData {
    std::vector<std::string> variables;
    ClassGroup class_group;
    std::vector<std::vector<Z>> degrees;
};

// Homogeneous derivation x^exponents d/dx_target of the ray-variable
// polynomial ring; exponents[target] is zero.  Always of class degree zero.
struct CoxLND {
    size_t target = 0;
    std::vector<Z> exponents;

    bool operator==(const CoxLND&) const = default;
};

struct AffineConeRoots {
    std::vector<DemazureRoot> roots;
    // True when roots beyond the exponent bound exist, so the list is a
    // window into an infinite set.
    bool truncated = false;
};

struct RootSplit {
    std::vector<DemazureRoot> semisimple;  // negation is again a root
    std::vector<DemazureRoot> unipotent;
};

// A face sigma_1 of a cone sigma_2, both by sorted ray indices.
struct ConePair {
    std::vector<size_t> face;
    std::vector<size_t> cone;

    bool operator==(const ConePair&) const = default;
};

// The normalized derivation tuple of one complete collection next to the
// perturbed tuple witnessing a second, non-normalized action: slot
// modified_slot additionally applies the root -p_i^* + d p_j^* (i =
// source_slot, j = modified_slot), with d minimal.  Slots are formal sums.
struct SecondAction {
    CompleteCollection collection;
    size_t source_slot = 0;
    size_t modified_slot = 0;
    Z d = 0;
    std::vector<std::vector<CoxLND>> normalized;
    std::vector<std::vector<CoxLND>> perturbed;
};

// Full structural check.  Violations of well-formedness (non-primitive or
// duplicate rays, bad indices, cones that are not strongly convex, listed
// rays that are not extremal, cones meeting outside a common face) raise
// MALFORMED_FAN naming the condition.  Completeness requires every maximal
// cone to be full-dimensional, every facet to be shared by exactly two
// maximal cones, and the facet graph to be connected.
FanReport validate_fan(const Fan& f);

// All Demazure roots of a complete fan, ordered by distinguished ray and
// then lexicographically.  The polyhedron per ray is boxed by exact
// Fourier-Motzkin bounds and scanned.
std::vector<DemazureRoot> demazure_roots(const Fan& f);

// Roots of a single full-dimensional cone whose pairings with the
// non-distinguished rays are capped by exponent_bound.
AffineConeRoots affine_cone_roots(const std::vector<std::vector<Z>>& cone_rays,
                                  const Z& exponent_bound);

CoxLND root_lnd(const Fan& f, const DemazureRoot& r);

MultiPoly apply_lnd(const CoxLND& lnd, const MultiPoly& f);

// True iff the derivations of the two roots commute: same distinguished ray,
// or both cross pairings vanish.
bool lnds_commute(const Fan& f, const DemazureRoot& a, const DemazureRoot& b);

// Every lattice basis among the rays whose complement sits in the opposite
// orthant, emitted in ascending index order with roots e_j = -p_j^*.
std::vector<CompleteCollection> complete_collections(const Fan& f);

bool has_additive_action(const Fan& f);

RootSplit root_split(const Fan& f);

// Number of pairwise non-equivalent additive actions on a complete toric
// surface: one when the fan is wide (some non-basis ray weighs heavier on
// each basis direction), two otherwise.
int surface_action_count(const Fan& f);

// True iff the basis rays of the leading complete collection each carry a
// single root; then every additive action is equivalent to the normalized
// one.
bool uniqueness_check(const Fan& f);

SecondAction second_action_tuple(const Fan& f);

CoxData cox_data(const Fan& f);

// Pairs (face, cone) with e nonpositive on the cone and the face cut out of
// it by the vanishing of e, one dimension down.  These are the orbit pairs
// connected by the one-parameter subgroup of the root.
std::vector<ConePair> he_connected_pairs(const Fan& f, const DemazureRoot& r);

Fan projective_space_fan(size_t n);
Fan hirzebruch_fan(unsigned d);

// Fan on Z^{n+1} / Z(weights), rays the primitive images of the standard
// basis.  Weights must be positive, sorted ascending, with gcd one.
Fan weighted_projective_fan(const std::vector<Z>& weights);

}  // namespace addact
