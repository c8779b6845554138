#include "addact/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "addact/error.hpp"
#include "addact/linineq.hpp"
#include "addact/matrix.hpp"

namespace addact {

namespace {

std::vector<Z> sub(const std::vector<Z>& a, const std::vector<Z>& b) {
    std::vector<Z> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
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

std::vector<Z> integral_direction(const std::vector<Q>& v) {
    Z scale = 1;
    for (const Q& x : v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Z> out;
    out.reserve(v.size());
    for (const Q& x : v) out.push_back(Z(x.get_num() * (scale / x.get_den())));
    return primitive_vector(out);
}

void require_polytope(const LatticePolytope& p) {
    size_t n = p.rank;
    if (n == 0) fail(ErrorCode::DegenerateInput, "rank must be positive");
    if (p.vertices.empty()) fail(ErrorCode::DegenerateInput, "polytope has no vertices");
    for (const auto& v : p.vertices)
        if (v.size() != n) fail(ErrorCode::DegenerateInput, "vertex dimension differs from rank");
    for (size_t i = 0; i < p.vertices.size(); ++i)
        for (size_t j = i + 1; j < p.vertices.size(); ++j)
            if (p.vertices[i] == p.vertices[j]) fail(ErrorCode::DegenerateInput, "duplicate vertex");

    std::vector<std::vector<Z>> diffs;
    for (size_t i = 1; i < p.vertices.size(); ++i)
        diffs.push_back(sub(p.vertices[i], p.vertices[0]));
    if (diffs.empty() || ZMatrix::from_rows(diffs).rank() != n)
        fail(ErrorCode::NotFullDimensional, "polytope is not full-dimensional");

    // convex-combination membership via the cone over lifted vertices
    for (size_t i = 0; i < p.vertices.size(); ++i) {
        std::vector<std::vector<Z>> lifted;
        for (size_t j = 0; j < p.vertices.size(); ++j) {
            if (j == i) continue;
            std::vector<Z> w = p.vertices[j];
            w.push_back(1);
            lifted.push_back(std::move(w));
        }
        std::vector<Z> v = p.vertices[i];
        v.push_back(1);
        if (in_cone(lifted, q_vector(v)))
            fail(ErrorCode::DegenerateInput, "listed vertex is not extreme");
    }
}

// Facet indices whose hyperplane passes through the given point.
std::vector<size_t> incident_facets(const FacetSystem& fs, const std::vector<Z>& v) {
    std::vector<size_t> out;
    for (size_t i = 0; i < fs.inequalities.size(); ++i)
        if (dot(fs.inequalities[i].normal, v) == fs.inequalities[i].bound) out.push_back(i);
    return out;
}

// Primitive directions of the polytope edges leaving vertex vi.  A second
// vertex is adjacent exactly when the facets containing both span a
// hyperplane arrangement of rank n-1.
std::vector<std::vector<Z>> edge_directions(const LatticePolytope& p, const FacetSystem& fs,
                                            size_t vi) {
    size_t n = p.rank;
    auto through = incident_facets(fs, p.vertices[vi]);
    std::vector<std::vector<Z>> dirs;
    for (size_t wi = 0; wi < p.vertices.size(); ++wi) {
        if (wi == vi) continue;
        std::vector<std::vector<Z>> commons;
        for (size_t i : through)
            if (dot(fs.inequalities[i].normal, p.vertices[wi]) == fs.inequalities[i].bound)
                commons.push_back(fs.inequalities[i].normal);
        size_t r = commons.empty() ? 0 : ZMatrix::from_rows(commons).rank();
        if (r == n - 1) dirs.push_back(primitive_vector(sub(p.vertices[wi], p.vertices[vi])));
    }
    return dirs;
}

}  // namespace

FacetSystem facets(const LatticePolytope& p) {
    require_polytope(p);
    size_t n = p.rank;
    std::set<std::pair<std::vector<Z>, Z>> found;
    if (n == 1) {
        Z lo = p.vertices[0][0], hi = lo;
        for (const auto& v : p.vertices) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        found.insert({{Z(-1)}, -lo});
        found.insert({{Z(1)}, hi});
    } else {
        for (const auto& pick : combinations(p.vertices.size(), n)) {
            std::vector<std::vector<Z>> diffs;
            for (size_t i = 1; i < n; ++i)
                diffs.push_back(sub(p.vertices[pick[i]], p.vertices[pick[0]]));
            if (ZMatrix::from_rows(diffs).rank() != n - 1) continue;
            std::vector<std::vector<Q>> qrows;
            for (const auto& d : diffs) qrows.push_back(q_vector(d));
            std::vector<Z> u = integral_direction(QMatrix::from_rows(qrows).kernel_basis().row(0));
            Z a = dot(u, p.vertices[pick[0]]);
            bool above = false, below = false;
            for (const auto& v : p.vertices) {
                Z d = dot(u, v);
                above = above || d > a;
                below = below || d < a;
            }
            if (above && below) continue;
            if (above) {
                for (Z& c : u) c = -c;
                a = -a;
            }
            found.insert({u, a});
        }
    }
    FacetSystem out;
    for (const auto& [normal, bound] : found) out.inequalities.push_back({normal, bound});
    return out;
}

Fan normal_fan(const LatticePolytope& p) {
    FacetSystem fs = facets(p);
    Fan f;
    f.rank = p.rank;
    for (const auto& ineq : fs.inequalities) {
        std::vector<Z> ray(ineq.normal.size());
        for (size_t i = 0; i < ray.size(); ++i) ray[i] = -ineq.normal[i];
        f.rays.push_back(std::move(ray));
    }
    for (const auto& v : p.vertices) f.max_cones.push_back(incident_facets(fs, v));
    auto rep = validate_fan(f);
    if (!rep.is_valid || !rep.is_complete) fail(ErrorCode::Internal, "normal fan failed validation");
    return f;
}

std::optional<std::vector<Z>> inscribed_in_rectangle(const LatticePolytope& p) {
    FacetSystem fs = facets(p);
    size_t n = p.rank;
    for (size_t vi = 0; vi < p.vertices.size(); ++vi) {
        auto dirs = edge_directions(p, fs, vi);
        if (dirs.size() != n) continue;
        if (!ZMatrix::from_rows(dirs).is_lattice_basis()) continue;
        const auto& v0 = p.vertices[vi];
        bool ok = true;
        for (const auto& ineq : fs.inequalities) {
            if (dot(ineq.normal, v0) == ineq.bound) continue;
            for (const auto& d : dirs)
                if (dot(ineq.normal, d) < 0) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) return v0;
    }
    return std::nullopt;
}

std::vector<std::vector<Z>> lattice_points(const LatticePolytope& p) {
    FacetSystem fs = facets(p);
    size_t n = p.rank;
    std::vector<Z> lo = p.vertices[0], hi = p.vertices[0];
    for (const auto& v : p.vertices)
        for (size_t c = 0; c < n; ++c) {
            lo[c] = std::min(lo[c], v[c]);
            hi[c] = std::max(hi[c], v[c]);
        }
    std::vector<std::vector<Z>> out;
    std::vector<Z> x = lo;
    for (;;) {
        bool inside = true;
        for (const auto& ineq : fs.inequalities)
            if (dot(ineq.normal, x) > ineq.bound) {
                inside = false;
                break;
            }
        if (inside) out.push_back(x);
        size_t k = 0;
        while (k < n && x[k] == hi[k]) {
            x[k] = lo[k];
            ++k;
        }
        if (k == n) break;
        ++x[k];
    }
    return out;
}

namespace {

bool in_vertex_cone(const std::vector<std::vector<Z>>& normals, const std::vector<Z>& x) {
    for (const auto& u : normals)
        if (dot(u, x) > 0) return false;
    return true;
}

bool semigroup_member(const std::vector<Z>& x, const std::vector<std::vector<Z>>& gens,
                      const std::vector<std::vector<Z>>& normals,
                      std::map<std::vector<Z>, bool>& memo) {
    if (std::all_of(x.begin(), x.end(), [](const Z& c) { return c == 0; })) return true;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    memo[x] = false;
    bool ok = false;
    for (const auto& g : gens) {
        std::vector<Z> y = sub(x, g);
        // partial sums of generators never leave the vertex cone
        if (!in_vertex_cone(normals, y)) continue;
        if (semigroup_member(y, gens, normals, memo)) {
            ok = true;
            break;
        }
    }
    memo[x] = ok;
    return ok;
}

}  // namespace

AmpleReport very_ample_bounded(const LatticePolytope& p, const Z& search_bound) {
    FacetSystem fs = facets(p);
    size_t n = p.rank;

    // largest k with P a translate of k Q; k >= n-1 is always very ample
    Z k = 0;
    for (size_t i = 1; i < p.vertices.size(); ++i)
        for (const Z& d : sub(p.vertices[i], p.vertices[0]))
            mpz_gcd(k.get_mpz_t(), k.get_mpz_t(), d.get_mpz_t());
    if (k >= Z(static_cast<unsigned long>(n - 1))) return {AmpleReport::Status::Verified, 0};

    auto points = lattice_points(p);
    bool blind_spot = false;
    for (size_t vi = 0; vi < p.vertices.size(); ++vi) {
        const auto& v0 = p.vertices[vi];
        auto dirs = edge_directions(p, fs, vi);
        bool covered = true;
        for (const auto& d : dirs)
            for (const Z& c : d)
                if (abs(c) > search_bound) covered = false;
        if (!covered) {
            blind_spot = true;
            continue;
        }

        std::vector<std::vector<Z>> gens;
        for (const auto& m : points) {
            auto g = sub(m, v0);
            if (!std::all_of(g.begin(), g.end(), [](const Z& c) { return c == 0; }))
                gens.push_back(std::move(g));
        }
        std::vector<std::vector<Z>> normals;
        for (size_t i : incident_facets(fs, v0)) normals.push_back(fs.inequalities[i].normal);

        std::map<std::vector<Z>, bool> memo;
        std::vector<Z> lo(n, -search_bound), x(n, -search_bound);
        for (;;) {
            if (in_vertex_cone(normals, x) && !semigroup_member(x, gens, normals, memo))
                return {AmpleReport::Status::DilateHint, static_cast<unsigned>(n - 1)};
            size_t c = 0;
            while (c < n && x[c] == search_bound) {
                x[c] = lo[c];
                ++c;
            }
            if (c == n) break;
            ++x[c];
        }
    }
    if (blind_spot) return {AmpleReport::Status::Inconclusive, 0};
    return {AmpleReport::Status::Verified, 0};
}

}  // namespace addact
