#include "addact/toric.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "addact/error.hpp"
#include "addact/linineq.hpp"

namespace addact {

namespace {

Z q_floor(const Q& x) {
    Z out;
    mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return out;
}

Z q_ceil(const Q& x) {
    Z out;
    mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return out;
}

Z z_mod(const Z& a, const Z& k) {
    Z out;
    mpz_fdiv_r(out.get_mpz_t(), a.get_mpz_t(), k.get_mpz_t());
    return out;
}

Z z_exact(const Q& x) {
    if (x.get_den() != 1) fail(ErrorCode::Internal, "expected an integer matrix entry");
    return x.get_num();
}

int int_exact(const Z& z) {
    if (!z.fits_sint_p()) fail(ErrorCode::Internal, "exponent out of range");
    return static_cast<int>(z.get_si());
}

bool is_zero_vec(const std::vector<Z>& v) {
    return std::all_of(v.begin(), v.end(), [](const Z& x) { return x == 0; });
}

std::vector<std::vector<Z>> gather(const Fan& f, const std::vector<size_t>& idx) {
    std::vector<std::vector<Z>> out;
    out.reserve(idx.size());
    for (size_t i : idx) out.push_back(f.rays[i]);
    return out;
}

std::vector<std::vector<Q>> q_rows(const std::vector<std::vector<Z>>& rows) {
    std::vector<std::vector<Q>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(q_vector(r));
    return out;
}

// Clear denominators and reduce to the primitive direction.
std::vector<Z> integral_direction(const std::vector<Q>& v) {
    Z scale = 1;
    for (const Q& x : v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Z> out;
    out.reserve(v.size());
    for (const Q& x : v) out.push_back(Z(x.get_num() * (scale / x.get_den())));
    return primitive_vector(out);
}

std::vector<std::vector<size_t>> combinations(size_t m, size_t k) {
    std::vector<std::vector<size_t>> out;
    if (k > m) return out;
    std::vector<size_t> cur(k);
    for (size_t i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        size_t i = k;
        while (i > 0 && cur[i - 1] == m - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<std::vector<size_t>> sorted_cones(const Fan& f) {
    std::vector<std::vector<size_t>> cones = f.max_cones;
    for (auto& c : cones) std::sort(c.begin(), c.end());
    return cones;
}

size_t ray_rank(const std::vector<std::vector<Z>>& rows) {
    return rows.empty() ? 0 : ZMatrix::from_rows(rows).rank();
}

// Facets of a full-dimensional cone, each as the sorted set of its rays.
// Candidate hyperplanes come from (rank-1)-subsets; a candidate survives when
// the cone lies on one side of it.
std::set<std::vector<size_t>> cone_facets(const Fan& f, const std::vector<size_t>& cone) {
    size_t n = f.rank;
    std::set<std::vector<size_t>> out;
    if (n == 1) {
        out.insert(std::vector<size_t>{});
        return out;
    }
    for (const auto& pick : combinations(cone.size(), n - 1)) {
        std::vector<size_t> sub;
        for (size_t i : pick) sub.push_back(cone[i]);
        auto rows = gather(f, sub);
        if (ray_rank(rows) != n - 1) continue;
        QMatrix ker = QMatrix::from_rows(q_rows(rows)).kernel_basis();
        std::vector<Z> normal = integral_direction(ker.row(0));
        size_t pos = 0, neg = 0;
        std::vector<size_t> zero;
        for (size_t r : cone) {
            Z d = dot(normal, f.rays[r]);
            if (d > 0)
                ++pos;
            else if (d < 0)
                ++neg;
            else
                zero.push_back(r);
        }
        if ((pos > 0 && neg > 0) || zero.size() == cone.size()) continue;
        std::sort(zero.begin(), zero.end());
        out.insert(zero);
    }
    return out;
}

bool fan_complete(const Fan& f, const std::vector<std::vector<size_t>>& cones) {
    size_t n = f.rank;
    for (const auto& c : cones)
        if (ray_rank(gather(f, c)) != n) return false;
    std::map<std::vector<size_t>, std::vector<size_t>> owners;
    for (size_t ci = 0; ci < cones.size(); ++ci)
        for (const auto& facet : cone_facets(f, cones[ci])) owners[facet].push_back(ci);
    for (const auto& [facet, own] : owners)
        if (own.size() != 2) return false;
    std::vector<std::vector<size_t>> nbr(cones.size());
    for (const auto& [facet, own] : owners) {
        nbr[own[0]].push_back(own[1]);
        nbr[own[1]].push_back(own[0]);
    }
    std::vector<char> seen(cones.size(), 0);
    std::vector<size_t> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        size_t c = stack.back();
        stack.pop_back();
        for (size_t o : nbr[c])
            if (!seen[o]) {
                seen[o] = 1;
                stack.push_back(o);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

bool cone_smooth(const std::vector<std::vector<Z>>& rows) {
    ZMatrix m = ZMatrix::from_rows(rows);
    if (m.rank() != rows.size()) return false;
    SmithForm s = m.smith_normal_form();
    for (size_t i = 0; i < rows.size(); ++i)
        if (s.d.at(i, i) != 1) return false;
    return true;
}

void require_root(const Fan& f, const DemazureRoot& r) {
    if (r.distinguished_ray >= f.rays.size())
        fail(ErrorCode::DegenerateInput, "distinguished ray index out of range");
    if (r.e.size() != f.rank) fail(ErrorCode::DegenerateInput, "root dimension differs from rank");
    for (size_t i = 0; i < f.rays.size(); ++i) {
        Z p = dot(f.rays[i], r.e);
        if (i == r.distinguished_ray ? p != -1 : p < 0)
            fail(ErrorCode::DegenerateInput, "vector is not a Demazure root of this fan");
    }
}

// Integer points of { <p_rho, e> = -1, 0 <= <p_other, e> (<= cap) } in
// lexicographic order, via exact interval bounds per coordinate.
std::vector<std::vector<Z>> ray_root_vectors(const std::vector<std::vector<Z>>& rays, size_t rho,
                                             const Z* cap) {
    size_t n = rays[rho].size();
    IneqSystem sys(n);
    sys.add_ge(q_vector(rays[rho]), Q(-1));
    sys.add_le(q_vector(rays[rho]), Q(-1));
    for (size_t r = 0; r < rays.size(); ++r) {
        if (r == rho) continue;
        sys.add_ge(q_vector(rays[r]), Q(0));
        if (cap) sys.add_le(q_vector(rays[r]), Q(*cap));
    }
    std::vector<Z> lo(n), hi(n);
    for (size_t v = 0; v < n; ++v) {
        auto range = sys.variable_range(v);
        if (range.empty) return {};
        if (!range.lo || !range.hi) fail(ErrorCode::Internal, "root polyhedron is unbounded");
        lo[v] = q_ceil(*range.lo);
        hi[v] = q_floor(*range.hi);
        if (lo[v] > hi[v]) return {};
    }
    std::vector<std::vector<Z>> out;
    std::vector<Z> e = lo;
    for (;;) {
        bool ok = dot(rays[rho], e) == -1;
        for (size_t r = 0; ok && r < rays.size(); ++r) {
            if (r == rho) continue;
            Z p = dot(rays[r], e);
            ok = p >= 0 && (!cap || p <= *cap);
        }
        if (ok) out.push_back(e);
        size_t k = n;
        while (k > 0 && e[k - 1] == hi[k - 1]) {
            e[k - 1] = lo[k - 1];
            --k;
        }
        if (k == 0) break;
        ++e[k - 1];
    }
    return out;
}

// Least upper bound of <p_probe, e> over the root polyhedron of rho, nullopt
// when unbounded; -1 signals an empty polyhedron.
std::optional<Q> pairing_upper_bound(const std::vector<std::vector<Z>>& rays, size_t rho,
                                     size_t probe) {
    size_t n = rays[rho].size();
    IneqSystem sys(n + 1);
    auto pad = [](const std::vector<Z>& v, Q t) {
        std::vector<Q> a = q_vector(v);
        a.push_back(std::move(t));
        return a;
    };
    sys.add_eq(pad(rays[rho], Q(0)), Q(-1));
    for (size_t r = 0; r < rays.size(); ++r)
        if (r != rho) sys.add_ge(pad(rays[r], Q(0)), Q(0));
    std::vector<Q> link = q_vector(rays[probe]);
    for (Q& c : link) c = -c;
    link.push_back(Q(1));
    sys.add_eq(std::move(link), Q(0));
    auto range = sys.variable_range(n);
    if (range.empty) return Q(-1);
    if (!range.hi) return std::nullopt;
    return *range.hi;
}

FanReport checked_report(const Fan& f) { return validate_fan(f); }

void require_complete(const FanReport& rep, const char* what) {
    if (!rep.is_complete) fail(ErrorCode::NotComplete, what);
}

MultiPoly apply_lnd_sum(const std::vector<CoxLND>& terms, const MultiPoly& f) {
    MultiPoly out(f.nvars());
    for (const auto& t : terms) out += apply_lnd(t, f);
    return out;
}

// Zero iff every commutator of the given slot sums kills every variable.
void verify_tuple_commutes(const std::vector<std::vector<CoxLND>>& slots, size_t nvars,
                           const char* what) {
    for (size_t a = 0; a < slots.size(); ++a)
        for (size_t b = a + 1; b < slots.size(); ++b)
            for (size_t v = 0; v < nvars; ++v) {
                MultiPoly x = MultiPoly::variable(nvars, v);
                MultiPoly lhs = apply_lnd_sum(slots[a], apply_lnd_sum(slots[b], x));
                MultiPoly rhs = apply_lnd_sum(slots[b], apply_lnd_sum(slots[a], x));
                if (!(lhs - rhs).is_zero()) fail(ErrorCode::Internal, what);
            }
}

}  // namespace

FanReport validate_fan(const Fan& f) {
    size_t n = f.rank, m = f.rays.size();
    if (n == 0) fail(ErrorCode::MalformedFan, "rank must be positive");
    if (m == 0) fail(ErrorCode::MalformedFan, "fan has no rays");
    for (const auto& p : f.rays) {
        if (p.size() != n) fail(ErrorCode::MalformedFan, "ray dimension differs from rank");
        if (is_zero_vec(p)) fail(ErrorCode::MalformedFan, "zero ray");
        if (primitive_vector(p) != p) fail(ErrorCode::MalformedFan, "ray is not primitive");
    }
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (f.rays[i] == f.rays[j]) fail(ErrorCode::MalformedFan, "duplicate ray");

    if (f.max_cones.empty()) fail(ErrorCode::MalformedFan, "fan has no cones");
    std::vector<char> used(m, 0);
    std::vector<std::vector<size_t>> cones;
    for (const auto& given : f.max_cones) {
        if (given.empty()) fail(ErrorCode::MalformedFan, "empty cone");
        std::vector<size_t> c = given;
        for (size_t i : c) {
            if (i >= m) fail(ErrorCode::MalformedFan, "cone index out of range");
            used[i] = 1;
        }
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end())
            fail(ErrorCode::MalformedFan, "ray repeated within a cone");
        cones.push_back(std::move(c));
    }
    if (!std::all_of(used.begin(), used.end(), [](char u) { return u != 0; }))
        fail(ErrorCode::MalformedFan, "ray not used by any cone");
    for (size_t i = 0; i < cones.size(); ++i)
        for (size_t j = 0; j < cones.size(); ++j) {
            if (i == j) continue;
            if (std::includes(cones[j].begin(), cones[j].end(), cones[i].begin(), cones[i].end()))
                fail(ErrorCode::MalformedFan, "maximal cone contained in another");
        }

    for (const auto& c : cones) {
        auto vecs = gather(f, c);
        if (ray_rank(vecs) == c.size()) continue;  // simplicial: pointed and extremal for free
        if (!separating_functional_exists(n, {}, vecs, {}))
            fail(ErrorCode::MalformedFan, "cone is not strongly convex");
        for (size_t i = 0; i < vecs.size(); ++i) {
            std::vector<std::vector<Z>> others;
            for (size_t j = 0; j < vecs.size(); ++j)
                if (j != i) others.push_back(vecs[j]);
            if (in_cone(others, q_vector(vecs[i])))
                fail(ErrorCode::MalformedFan, "listed ray is not extremal in its cone");
        }
    }

    for (size_t i = 0; i < cones.size(); ++i)
        for (size_t j = i + 1; j < cones.size(); ++j) {
            std::vector<size_t> shared;
            std::set_intersection(cones[i].begin(), cones[i].end(), cones[j].begin(),
                                  cones[j].end(), std::back_inserter(shared));
            std::vector<size_t> ci, cj;
            std::set_difference(cones[i].begin(), cones[i].end(), shared.begin(), shared.end(),
                                std::back_inserter(ci));
            std::set_difference(cones[j].begin(), cones[j].end(), shared.begin(), shared.end(),
                                std::back_inserter(cj));
            if (!separating_functional_exists(n, gather(f, shared), gather(f, ci), gather(f, cj)))
                fail(ErrorCode::MalformedFan, "cones meet outside a common face");
        }

    FanReport rep;
    rep.is_valid = true;
    rep.is_smooth = std::all_of(cones.begin(), cones.end(), [&](const std::vector<size_t>& c) {
        return cone_smooth(gather(f, c));
    });
    rep.is_complete = fan_complete(f, cones);
    return rep;
}

std::vector<DemazureRoot> demazure_roots(const Fan& f) {
    require_complete(checked_report(f), "root enumeration needs a complete fan");
    auto cones = sorted_cones(f);
    std::vector<DemazureRoot> out;
    for (size_t rho = 0; rho < f.rays.size(); ++rho) {
        for (auto& e : ray_root_vectors(f.rays, rho, nullptr)) {
            // Complete support makes the sign conditions imply the cone
            // extension property; verify instead of trusting it.
            for (const auto& c : cones) {
                std::vector<size_t> zero;
                for (size_t r : c)
                    if (dot(f.rays[r], e) == 0) zero.push_back(r);
                if (zero.empty()) continue;
                zero.push_back(rho);
                std::sort(zero.begin(), zero.end());
                bool extended = std::any_of(cones.begin(), cones.end(), [&](const auto& c2) {
                    return std::includes(c2.begin(), c2.end(), zero.begin(), zero.end());
                });
                if (!extended)
                    fail(ErrorCode::Internal, "root fails the cone extension property");
            }
            out.push_back({std::move(e), rho});
        }
    }
    return out;
}

AffineConeRoots affine_cone_roots(const std::vector<std::vector<Z>>& cone_rays,
                                  const Z& exponent_bound) {
    if (cone_rays.empty()) fail(ErrorCode::DegenerateInput, "cone has no rays");
    size_t n = cone_rays.front().size();
    if (n == 0) fail(ErrorCode::DegenerateInput, "rays must have positive dimension");
    for (const auto& p : cone_rays) {
        if (p.size() != n) fail(ErrorCode::MalformedFan, "ray dimension mismatch");
        if (is_zero_vec(p)) fail(ErrorCode::MalformedFan, "zero ray");
        if (primitive_vector(p) != p) fail(ErrorCode::MalformedFan, "ray is not primitive");
    }
    for (size_t i = 0; i < cone_rays.size(); ++i)
        for (size_t j = i + 1; j < cone_rays.size(); ++j)
            if (cone_rays[i] == cone_rays[j]) fail(ErrorCode::MalformedFan, "duplicate ray");
    if (ray_rank(cone_rays) != n)
        fail(ErrorCode::DegenerateInput, "cone is not full-dimensional");
    if (!separating_functional_exists(n, {}, cone_rays, {}))
        fail(ErrorCode::MalformedFan, "cone is not strongly convex");
    for (size_t i = 0; i < cone_rays.size(); ++i) {
        std::vector<std::vector<Z>> others;
        for (size_t j = 0; j < cone_rays.size(); ++j)
            if (j != i) others.push_back(cone_rays[j]);
        if (!others.empty() && in_cone(others, q_vector(cone_rays[i])))
            fail(ErrorCode::MalformedFan, "listed ray is not extremal in its cone");
    }
    if (exponent_bound < 0) fail(ErrorCode::DegenerateInput, "exponent bound must be nonnegative");

    AffineConeRoots out;
    for (size_t rho = 0; rho < cone_rays.size(); ++rho)
        for (auto& e : ray_root_vectors(cone_rays, rho, &exponent_bound))
            out.roots.push_back({std::move(e), rho});
    for (size_t rho = 0; rho < cone_rays.size() && !out.truncated; ++rho)
        for (size_t probe = 0; probe < cone_rays.size() && !out.truncated; ++probe) {
            if (probe == rho) continue;
            auto sup = pairing_upper_bound(cone_rays, rho, probe);
            if (!sup || *sup > exponent_bound) out.truncated = true;
        }
    return out;
}

CoxLND root_lnd(const Fan& f, const DemazureRoot& r) {
    checked_report(f);
    require_root(f, r);
    CoxLND out;
    out.target = r.distinguished_ray;
    out.exponents.assign(f.rays.size(), Z(0));
    for (size_t i = 0; i < f.rays.size(); ++i)
        if (i != r.distinguished_ray) out.exponents[i] = dot(f.rays[i], r.e);

    // The class degree of the monomial matches the target variable exactly
    // because the pairings against e sum to a principal divisor class.
    CoxData cox = cox_data(f);
    size_t width = cox.class_group.free_rank + cox.class_group.torsion.size();
    std::vector<Z> total(width, Z(0));
    for (size_t i = 0; i < f.rays.size(); ++i) {
        Z c = dot(f.rays[i], r.e);
        for (size_t k = 0; k < width; ++k) total[k] += c * cox.degrees[i][k];
    }
    for (size_t k = 0; k < cox.class_group.free_rank; ++k)
        if (total[k] != 0) fail(ErrorCode::Internal, "derivation has nonzero class degree");
    for (size_t t = 0; t < cox.class_group.torsion.size(); ++t)
        if (z_mod(total[cox.class_group.free_rank + t], cox.class_group.torsion[t]) != 0)
            fail(ErrorCode::Internal, "derivation has nonzero class degree");
    return out;
}

MultiPoly apply_lnd(const CoxLND& lnd, const MultiPoly& f) {
    size_t m = lnd.exponents.size();
    if (f.nvars() != m) fail(ErrorCode::DegenerateInput, "variable count mismatch");
    Expo mono(m, 0);
    for (size_t i = 0; i < m; ++i) mono[i] = int_exact(lnd.exponents[i]);
    return MultiPoly::monomial(m, mono, Q(1)) * derivative(f, lnd.target);
}

bool lnds_commute(const Fan& f, const DemazureRoot& a, const DemazureRoot& b) {
    checked_report(f);
    require_root(f, a);
    require_root(f, b);
    if (a.distinguished_ray == b.distinguished_ray) return true;
    return dot(f.rays[a.distinguished_ray], b.e) == 0 &&
           dot(f.rays[b.distinguished_ray], a.e) == 0;
}

std::vector<CompleteCollection> complete_collections(const Fan& f) {
    require_complete(checked_report(f), "complete collections need a complete fan");
    size_t n = f.rank, m = f.rays.size();
    std::vector<CompleteCollection> out;
    for (const auto& pick : combinations(m, n)) {
        ZMatrix basis = ZMatrix::from_rows(gather(f, pick));
        if (!basis.is_lattice_basis()) continue;
        QMatrix coords = basis.to_q().transpose().inverse();
        bool opposite = true;
        for (size_t r = 0; r < m && opposite; ++r) {
            if (std::find(pick.begin(), pick.end(), r) != pick.end()) continue;
            for (const Q& c : coords.apply(q_vector(f.rays[r])))
                if (c > 0) {
                    opposite = false;
                    break;
                }
        }
        if (!opposite) continue;
        CompleteCollection col;
        col.basis_rays = pick;
        for (size_t j = 0; j < n; ++j) {
            std::vector<Z> e;
            for (const Q& c : coords.row(j)) e.push_back(-z_exact(c));
            col.roots.push_back({std::move(e), pick[j]});
        }
        out.push_back(std::move(col));
    }
    return out;
}

bool has_additive_action(const Fan& f) { return !complete_collections(f).empty(); }

RootSplit root_split(const Fan& f) {
    auto roots = demazure_roots(f);
    std::set<std::vector<Z>> all;
    for (const auto& r : roots) all.insert(r.e);
    RootSplit out;
    for (auto& r : roots) {
        std::vector<Z> neg = r.e;
        for (Z& x : neg) x = -x;
        (all.count(neg) ? out.semisimple : out.unipotent).push_back(std::move(r));
    }
    return out;
}

int surface_action_count(const Fan& f) {
    if (f.rank != 2) fail(ErrorCode::NotSurface, "action count is defined for surfaces");
    auto cols = complete_collections(f);
    if (cols.empty()) fail(ErrorCode::NoAdditiveAction, "fan admits no additive action");
    const auto& pick = cols.front().basis_rays;
    QMatrix coords = ZMatrix::from_rows(gather(f, pick)).to_q().transpose().inverse();
    bool first_heavier = false, second_heavier = false;
    for (size_t r = 0; r < f.rays.size(); ++r) {
        if (r == pick[0] || r == pick[1]) continue;
        auto c = coords.apply(q_vector(f.rays[r]));
        // alpha_i = -c_i >= 0
        if (c[0] < c[1]) first_heavier = true;
        if (c[0] > c[1]) second_heavier = true;
    }
    return first_heavier && second_heavier ? 1 : 2;
}

bool uniqueness_check(const Fan& f) {
    auto cols = complete_collections(f);
    if (cols.empty()) fail(ErrorCode::NoAdditiveAction, "fan admits no additive action");
    auto roots = demazure_roots(f);
    const auto& col = cols.front();
    for (size_t j = 0; j < col.basis_rays.size(); ++j) {
        size_t count = 0;
        bool matches = false;
        for (const auto& r : roots)
            if (r.distinguished_ray == col.basis_rays[j]) {
                ++count;
                matches = r.e == col.roots[j].e;
            }
        if (count != 1 || !matches) return false;
    }
    return true;
}

SecondAction second_action_tuple(const Fan& f) {
    auto cols = complete_collections(f);
    if (cols.empty()) fail(ErrorCode::NoAdditiveAction, "fan admits no additive action");
    if (uniqueness_check(f))
        fail(ErrorCode::NotApplicable,
             "every additive action is equivalent to the normalized one");
    auto roots = demazure_roots(f);
    size_t n = f.rank;

    for (const auto& col : cols)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                // Wanted: a root e_i - d e_j with d >= 1 and the same
                // distinguished ray as slot i.
                std::optional<Z> best;
                for (const auto& r : roots) {
                    if (r.distinguished_ray != col.basis_rays[i]) continue;
                    std::optional<Z> d;
                    bool shaped = true;
                    for (size_t k = 0; k < n && shaped; ++k) {
                        Z diff = r.e[k] - col.roots[i].e[k];
                        const Z& ej = col.roots[j].e[k];
                        if (ej == 0)
                            shaped = diff == 0;
                        else if (diff % ej != 0)
                            shaped = false;
                        else if (!d)
                            d = -diff / ej;
                        else
                            shaped = *d == -diff / ej;
                    }
                    if (!shaped || !d || *d < 1) continue;
                    if (!best || *d < *best) best = *d;
                }
                if (!best) continue;

                SecondAction out;
                out.collection = col;
                out.source_slot = i;
                out.modified_slot = j;
                out.d = *best;
                for (size_t k = 0; k < n; ++k)
                    out.normalized.push_back({root_lnd(f, col.roots[k])});
                out.perturbed = out.normalized;
                std::vector<Z> shape(n);
                for (size_t k = 0; k < n; ++k)
                    shape[k] = col.roots[i].e[k] - *best * col.roots[j].e[k];
                out.perturbed[j].push_back(root_lnd(f, {shape, col.basis_rays[i]}));
                verify_tuple_commutes(out.normalized, f.rays.size(),
                                      "normalized tuple fails to commute");
                verify_tuple_commutes(out.perturbed, f.rays.size(),
                                      "perturbed tuple fails to commute");
                return out;
            }
    fail(ErrorCode::NotApplicable, "no root of the shape -p_i* + d p_j* exists");
}

CoxData cox_data(const Fan& f) {
    checked_report(f);
    size_t n = f.rank, m = f.rays.size();
    SmithForm s = ZMatrix::from_rows(f.rays).smith_normal_form();
    size_t rank = 0;
    std::vector<size_t> torsion_rows;
    std::vector<Z> torsion;
    for (size_t i = 0; i < std::min(m, n); ++i) {
        if (s.d.at(i, i) == 0) break;
        ++rank;
        if (s.d.at(i, i) > 1) {
            torsion_rows.push_back(i);
            torsion.push_back(s.d.at(i, i));
        }
    }
    size_t free_rank = m - rank;

    CoxData out;
    out.variables = default_names(m, "x");
    out.class_group = {free_rank, torsion};

    // Degree of variable i is the image of the i-th unit vector in the
    // cokernel, read off through u.  The free block is only well defined up
    // to a lattice basis change, so present it in Hermite form.
    ZMatrix g(free_rank, m);
    for (size_t k = 0; k < free_rank; ++k)
        for (size_t i = 0; i < m; ++i) g.at(k, i) = s.u.at(rank + k, i);
    if (free_rank > 0) {
        g = g.hermite_rows();
        if (g.rows() != free_rank) fail(ErrorCode::Internal, "degree block lost rank");
    }
    for (size_t i = 0; i < m; ++i) {
        std::vector<Z> deg;
        for (size_t k = 0; k < free_rank; ++k) deg.push_back(g.at(k, i));
        for (size_t t = 0; t < torsion_rows.size(); ++t)
            deg.push_back(z_mod(s.u.at(torsion_rows[t], i), torsion[t]));
        out.degrees.push_back(std::move(deg));
    }
    return out;
}

std::vector<ConePair> he_connected_pairs(const Fan& f, const DemazureRoot& r) {
    checked_report(f);
    require_root(f, r);
    std::set<std::vector<size_t>> faces;
    for (const auto& c : sorted_cones(f)) {
        size_t k = c.size();
        for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
            std::vector<size_t> part, rest;
            for (size_t i = 0; i < k; ++i)
                ((mask >> i) & 1 ? part : rest).push_back(c[i]);
            if (separating_functional_exists(f.rank, gather(f, part), gather(f, rest), {}))
                faces.insert(std::move(part));
        }
    }
    std::vector<std::vector<size_t>> ordered(faces.begin(), faces.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    std::vector<ConePair> out;
    for (const auto& cone : ordered) {
        if (cone.empty()) continue;
        bool nonpositive = true;
        std::vector<size_t> face;
        for (size_t i : cone) {
            Z p = dot(f.rays[i], r.e);
            if (p > 0) {
                nonpositive = false;
                break;
            }
            if (p == 0) face.push_back(i);
        }
        if (!nonpositive) continue;
        if (ray_rank(gather(f, face)) + 1 != ray_rank(gather(f, cone))) continue;
        out.push_back({face, cone});
    }
    return out;
}

Fan projective_space_fan(size_t n) {
    if (n == 0) fail(ErrorCode::DegenerateInput, "projective space needs positive dimension");
    Fan f;
    f.rank = n;
    for (size_t i = 0; i < n; ++i) {
        std::vector<Z> e(n, Z(0));
        e[i] = 1;
        f.rays.push_back(std::move(e));
    }
    f.rays.push_back(std::vector<Z>(n, Z(-1)));
    f.max_cones = combinations(n + 1, n);
    return f;
}

Fan hirzebruch_fan(unsigned d) {
    Fan f;
    f.rank = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, Z(d)}, {0, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return f;
}

Fan weighted_projective_fan(const std::vector<Z>& weights) {
    if (weights.size() < 2) fail(ErrorCode::InvalidWeights, "need at least two weights");
    for (const Z& w : weights)
        if (w <= 0) fail(ErrorCode::InvalidWeights, "weights must be positive");
    if (!std::is_sorted(weights.begin(), weights.end()))
        fail(ErrorCode::InvalidWeights, "weights must be sorted ascending");
    Z g = 0;
    for (const Z& w : weights) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.get_mpz_t());
    if (g != 1) fail(ErrorCode::InvalidWeights, "weights must have gcd one");

    size_t n = weights.size() - 1;
    ZMatrix column(weights.size(), 1);
    for (size_t i = 0; i < weights.size(); ++i) column.at(i, 0) = weights[i];
    // u maps the weight vector to +-e_0, so dropping the first coordinate
    // of u y realizes the quotient lattice.
    ZMatrix u = column.smith_normal_form().u;
    Fan f;
    f.rank = n;
    for (size_t i = 0; i < weights.size(); ++i) {
        std::vector<Z> image(n);
        for (size_t k = 0; k < n; ++k) image[k] = u.at(k + 1, i);
        if (is_zero_vec(image)) fail(ErrorCode::Internal, "ray image collapsed");
        f.rays.push_back(primitive_vector(image));
    }
    for (size_t i = 0; i < f.rays.size(); ++i)
        for (size_t j = i + 1; j < f.rays.size(); ++j)
            if (f.rays[i] == f.rays[j]) fail(ErrorCode::Internal, "ray images coincide");
    f.max_cones = combinations(n + 1, n);
    return f;
}

}  // namespace addact
