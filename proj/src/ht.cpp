#include "addact/ht.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "addact/error.hpp"

namespace addact {

namespace {

std::map<Expo, size_t> index_map(const std::vector<Expo>& monos) {
    std::map<Expo, size_t> idx;
    for (size_t i = 0; i < monos.size(); ++i) idx[monos[i]] = i;
    return idx;
}

int max_degree_of(const std::vector<MultiPoly>& polys) {
    int d = 0;
    for (const auto& p : polys) d = std::max(d, p.total_degree());
    return d;
}

std::vector<Q> poly_row(const MultiPoly& p, const std::map<Expo, size_t>& idx) {
    std::vector<Q> row(idx.size(), Q(0));
    for (const auto& [e, c] : p.terms()) row[idx.at(e)] = c;
    return row;
}

MultiPoly row_poly(size_t nvars, const std::vector<Q>& row, const std::vector<Expo>& monos) {
    MultiPoly out(nvars);
    for (size_t i = 0; i < monos.size(); ++i)
        if (row[i] != 0) out.add_term(monos[i], row[i]);
    return out;
}

// rref over the monomial coordinates; pivot monomials ascend, rows are monic
// at their pivot.
std::vector<MultiPoly> canonical_polys(size_t nvars, const std::vector<MultiPoly>& polys) {
    auto monos = monomials_up_to(nvars, max_degree_of(polys));
    auto idx = index_map(monos);
    std::vector<std::vector<Q>> rows;
    for (const auto& p : polys) rows.push_back(poly_row(p, idx));
    QMatrix mat = QMatrix::from_rows(std::move(rows));
    auto pivots = mat.rref_in_place();
    std::vector<MultiPoly> out;
    for (size_t i = 0; i < pivots.size(); ++i) out.push_back(row_poly(nvars, mat.row(i), monos));
    return out;
}

size_t span_dim(size_t nvars, const std::vector<MultiPoly>& polys) {
    return canonical_polys(nvars, polys).size();
}

// Coefficients of exp(x_1 u_1 + ... + x_n u_n) along the algebra basis.
std::vector<MultiPoly> exp_coefficients(const Algebra& a,
                                        const std::vector<std::vector<Q>>& u) {
    size_t m = a.dim(), n = u.size();
    std::vector<MultiPoly> z(m, MultiPoly(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < m; ++k)
            if (u[i][k] != 0) z[k] += MultiPoly::variable(n, i).scaled(u[i][k]);

    std::vector<MultiPoly> acc(m, MultiPoly(n));
    for (size_t k = 0; k < m; ++k) acc[k] = MultiPoly::constant(n, a.unit()[k]);
    std::vector<MultiPoly> term = acc;
    for (size_t k = 1; k <= m; ++k) {
        term = tensor_multiply(a, term, z, n);
        bool zero = true;
        for (auto& t : term) {
            t = t.scaled(Q(1) / Q(static_cast<unsigned long>(k)));
            if (!t.is_zero()) zero = false;
        }
        if (zero) break;
        if (k == m) fail(ErrorCode::Internal, "exponential argument is not nilpotent");
        for (size_t j = 0; j < m; ++j) acc[j] += term[j];
    }
    return acc;
}

// Values of the monomials S^e at S_i -> u_i, in the listed order.  The list
// must be closed under dividing out one variable (ascending-degree listings
// of standard monomials and of monomials_up_to both are).
std::vector<std::vector<Q>> evaluate_monomials(const Algebra& a,
                                               const std::vector<std::vector<Q>>& u,
                                               const std::vector<Expo>& monos) {
    std::map<Expo, std::vector<Q>> memo;
    std::vector<std::vector<Q>> out;
    out.reserve(monos.size());
    for (const Expo& e : monos) {
        std::vector<Q> val;
        if (mono_degree(e) == 0) {
            val = a.unit();
        } else {
            size_t i = 0;
            while (e[i] == 0) ++i;
            Expo e2 = e;
            --e2[i];
            auto it = memo.find(e2);
            if (it == memo.end()) fail(ErrorCode::Internal, "monomial list not divisor-closed");
            val = a.multiply(u[i], it->second);
        }
        memo[e] = val;
        out.push_back(std::move(val));
    }
    return out;
}

// The unital subalgebra generated by the span reaches all of A.
bool spans_whole_algebra(const Algebra& a, const std::vector<std::vector<Q>>& u) {
    size_t m = a.dim();
    Subspace w = Subspace::span(m, {a.unit()}).sum(Subspace::span(m, u));
    for (;;) {
        std::vector<std::vector<Q>> prods;
        for (const auto& ui : u)
            for (size_t r = 0; r < w.dim(); ++r) prods.push_back(a.multiply(ui, w.basis().row(r)));
        Subspace next = w.sum(Subspace::span(m, prods));
        if (next.dim() == w.dim()) break;
        w = next;
    }
    return w.dim() == m;
}

void check_generating_subspace(const GeneratingSubspace& v) {
    size_t n = v.nvars;
    if (v.basis.empty()) fail(ErrorCode::DegenerateInput, "empty subspace");
    auto monos = monomials_up_to(n, max_degree_of(v.basis));
    auto idx = index_map(monos);
    std::vector<std::vector<Q>> rows;
    for (const auto& p : v.basis) rows.push_back(poly_row(p, idx));
    Subspace span = Subspace::span(monos.size(), rows);
    if (!span.contains(poly_row(MultiPoly::constant(n, 1), idx)))
        fail(ErrorCode::DegenerateInput, "subspace misses the constants");
    for (const auto& p : v.basis)
        for (size_t i = 0; i < n; ++i) {
            MultiPoly d = derivative(p, i);
            if (!span.contains(poly_row(d, idx)))
                fail(ErrorCode::DegenerateInput, "subspace is not closed under derivatives");
        }
    if (n == 0) return;
    // degeneracy: a constant vector field sum c_i d/dx_i killing everything
    QMatrix sys(0, n);
    for (const auto& p : v.basis) {
        std::vector<MultiPoly> partials;
        for (size_t i = 0; i < n; ++i) partials.push_back(derivative(p, i));
        for (const Expo& e : monos) {
            std::vector<Q> row(n, Q(0));
            bool nonzero = false;
            for (size_t i = 0; i < n; ++i) {
                row[i] = partials[i].coeff(e);
                if (row[i] != 0) nonzero = true;
            }
            if (nonzero) sys.append_row(std::move(row));
        }
    }
    if (sys.rows() == 0 || sys.kernel_basis().rows() > 0)
        fail(ErrorCode::DegenerateInput, "a constant vector field annihilates the subspace");
}

}  // namespace

GaPair pair_with_maximal_ideal(QuotientPresentation qp) {
    size_t m = qp.algebra.dim();
    GaPair p{std::move(qp), {}};
    for (size_t i = 1; i < m; ++i) {
        std::vector<Q> e(m, Q(0));
        e[i] = 1;
        p.u_basis.push_back(std::move(e));
    }
    return p;
}

GaPair pair_with_u(QuotientPresentation qp, std::vector<std::vector<Q>> u_basis) {
    return GaPair{std::move(qp), std::move(u_basis)};
}

bool validate_pair(const GaPair& p) {
    size_t m = p.m();
    for (const auto& u : p.u_basis) {
        if (u.size() != m) return false;
        if (u[0] != 0) return false;
    }
    Subspace uspan = Subspace::span(m, p.u_basis);
    if (uspan.dim() != p.u_basis.size()) return false;
    return spans_whole_algebra(p.qp.algebra, p.u_basis);
}

GroebnerBasis presentation_ideal(const Algebra& a, const std::vector<std::vector<Q>>& u,
                                 unsigned degree_cap) {
    if (!spans_whole_algebra(a, u))
        fail(ErrorCode::DegenerateInput, "subspace does not generate the algebra");
    size_t n = u.size(), m = a.dim();
    auto monos = monomials_up_to(n, static_cast<int>(m));
    auto vals = evaluate_monomials(a, u, monos);

    // Once every monomial of one degree evaluates to zero, so do all higher
    // ones; generators up to and including that degree present the kernel.
    size_t keep = monos.size();
    for (int d = 1; d <= static_cast<int>(m); ++d) {
        bool all_zero = true;
        size_t end = 0;
        for (size_t i = 0; i < monos.size(); ++i) {
            if (mono_degree(monos[i]) > d) break;
            end = i + 1;
            if (mono_degree(monos[i]) == d)
                for (const Q& c : vals[i])
                    if (c != 0) all_zero = false;
        }
        if (all_zero) {
            keep = end;
            break;
        }
    }

    QMatrix eval(m, keep);
    for (size_t col = 0; col < keep; ++col)
        for (size_t r = 0; r < m; ++r) eval.at(r, col) = vals[col][r];
    QMatrix ker = eval.kernel_basis();
    std::vector<Expo> kept(monos.begin(), monos.begin() + static_cast<long>(keep));
    std::vector<MultiPoly> gens;
    for (size_t r = 0; r < ker.rows(); ++r) gens.push_back(row_poly(n, ker.row(r), kept));
    return groebner(std::move(gens), MonoOrder::GrLex, degree_cap);
}

GroebnerBasis ideal_from_pair(const GaPair& p, unsigned degree_cap) {
    if (!validate_pair(p))
        fail(ErrorCode::DegenerateInput, "subspace does not generate the algebra");
    return presentation_ideal(p.qp.algebra, p.u_basis, degree_cap);
}

GeneratingSubspace generating_subspace(const GaPair& p) {
    if (!validate_pair(p))
        fail(ErrorCode::DegenerateInput, "subspace does not generate the algebra");
    auto coeffs = exp_coefficients(p.qp.algebra, p.u_basis);
    GeneratingSubspace v;
    v.nvars = p.n();
    v.basis = canonical_polys(p.n(), coeffs);
    if (v.basis.size() != p.m())
        fail(ErrorCode::Internal, "exponential coefficients are linearly dependent");
    return v;
}

GeneratingSubspace v_from_ideal(const GroebnerBasis& gb) {
    if (gb.gens.empty()) fail(ErrorCode::DegenerateInput, "zero ideal has infinite codimension");
    size_t n = gb.nvars();
    QuotientPresentation qp = quotient_presentation(n, gb.gens, gb.order);
    size_t m = qp.algebra.dim();

    std::vector<std::vector<Q>> varcoords;
    for (size_t i = 0; i < n; ++i) varcoords.push_back(qp.project(MultiPoly::variable(n, i)));
    if (Subspace::span(m, varcoords).dim() != n)
        fail(ErrorCode::DegenerateInput, "ideal contains a linear form");

    auto monos = monomials_up_to(n, static_cast<int>(m) - 1);
    // f_k picks up 1/e! times the mu_k-coordinate of the normal form of x^e
    std::vector<MultiPoly> fs(m, MultiPoly(n));
    for (const Expo& e : monos) {
        auto coords = qp.project(MultiPoly::monomial(n, e));
        Q scale = 1;
        for (int t : e) scale *= Q(factorial(static_cast<unsigned>(t)));
        for (size_t k = 0; k < m; ++k)
            if (coords[k] != 0) fs[k].add_term(e, coords[k] / scale);
    }
    GeneratingSubspace v;
    v.nvars = n;
    v.basis = canonical_polys(n, fs);
    if (v.basis.size() != m) fail(ErrorCode::Internal, "orthogonal space has wrong dimension");
    return v;
}

GroebnerBasis ideal_from_v(const GeneratingSubspace& v, unsigned degree_cap) {
    check_generating_subspace(v);
    size_t n = v.nvars;
    int bound = max_degree_of(v.basis) + 1;
    auto monos = monomials_up_to(n, bound);
    QMatrix pairs(v.basis.size(), monos.size());
    for (size_t r = 0; r < v.basis.size(); ++r)
        for (size_t col = 0; col < monos.size(); ++col) {
            Q c = v.basis[r].coeff(monos[col]);
            if (c == 0) continue;
            Q scale = 1;
            for (int t : monos[col]) scale *= Q(factorial(static_cast<unsigned>(t)));
            pairs.at(r, col) = c * scale;
        }
    QMatrix ker = pairs.kernel_basis();
    std::vector<MultiPoly> gens;
    for (size_t r = 0; r < ker.rows(); ++r) gens.push_back(row_poly(n, ker.row(r), monos));
    return groebner(std::move(gens), MonoOrder::GrLex, degree_cap);
}

GeneratingSubspace close_under_derivations(size_t nvars, const std::vector<MultiPoly>& seeds) {
    std::vector<MultiPoly> work;
    work.push_back(MultiPoly::constant(nvars, 1));
    for (const auto& s : seeds) {
        if (s.nvars() != nvars) fail(ErrorCode::Internal, "seed arity mismatch");
        if (!s.is_zero()) work.push_back(s);
    }
    for (size_t idx = 0; idx < work.size(); ++idx)
        for (size_t i = 0; i < nvars; ++i) {
            MultiPoly d = derivative(work[idx], i);
            if (d.is_zero()) continue;
            if (std::find(work.begin(), work.end(), d) == work.end()) work.push_back(d);
        }
    GeneratingSubspace v;
    v.nvars = nvars;
    v.basis = canonical_polys(nvars, work);
    check_generating_subspace(v);
    return v;
}

QMatrix SymbolicMatrix::eval(const std::vector<Q>& point) const {
    QMatrix out(size, size);
    for (size_t i = 0; i < size; ++i)
        for (size_t j = 0; j < size; ++j) out.at(i, j) = poly_eval(entries[i][j], point);
    return out;
}

SymbolicMatrix representation(const GaPair& p) {
    if (!validate_pair(p))
        fail(ErrorCode::DegenerateInput, "subspace does not generate the algebra");
    size_t n = p.n(), m = p.m();
    std::vector<QMatrix> mult;
    for (const auto& u : p.u_basis) mult.push_back(p.qp.algebra.mult_operator(u));

    auto zero_mat = [&] {
        return std::vector<std::vector<MultiPoly>>(m, std::vector<MultiPoly>(m, MultiPoly(n)));
    };
    auto z = zero_mat();
    for (size_t i = 0; i < n; ++i)
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < m; ++c)
                if (mult[i].at(r, c) != 0)
                    z[r][c] += MultiPoly::variable(n, i).scaled(mult[i].at(r, c));

    auto acc = zero_mat();
    auto term = zero_mat();
    for (size_t i = 0; i < m; ++i) {
        acc[i][i] = MultiPoly::constant(n, 1);
        term[i][i] = MultiPoly::constant(n, 1);
    }
    for (size_t k = 1; k <= m; ++k) {
        auto next = zero_mat();
        bool zero = true;
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < m; ++c) {
                MultiPoly s(n);
                for (size_t t = 0; t < m; ++t)
                    if (!term[r][t].is_zero() && !z[t][c].is_zero()) s += term[r][t] * z[t][c];
                next[r][c] = s.scaled(Q(1) / Q(static_cast<unsigned>(k)));
                if (!next[r][c].is_zero()) zero = false;
            }
        term = std::move(next);
        if (zero) break;
        if (k == m) fail(ErrorCode::Internal, "representation argument is not nilpotent");
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < m; ++c) acc[r][c] += term[r][c];
    }
    return SymbolicMatrix{m, n, std::move(acc)};
}

std::vector<MultiPoly> projective_action(const Algebra& a) {
    Subspace mx = maximal_ideal(a);
    size_t m = a.dim(), n = m - 1;
    size_t nv = n + m;  // a_1..a_n then z_0..z_n

    QMatrix basis_change(m, m);
    for (size_t r = 0; r < m; ++r) basis_change.at(r, 0) = a.unit()[r];
    for (size_t j = 0; j < n; ++j)
        for (size_t r = 0; r < m; ++r) basis_change.at(r, j + 1) = mx.basis().at(j, r);
    QMatrix inv = basis_change.inverse();

    std::vector<QMatrix> mult;
    for (size_t j = 0; j < n; ++j) mult.push_back(a.mult_operator(mx.basis().row(j)));

    auto zero_mat = [&] {
        return std::vector<std::vector<MultiPoly>>(m, std::vector<MultiPoly>(m, MultiPoly(nv)));
    };
    auto z = zero_mat();
    for (size_t i = 0; i < n; ++i)
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < m; ++c)
                if (mult[i].at(r, c) != 0)
                    z[r][c] += MultiPoly::variable(nv, i).scaled(mult[i].at(r, c));

    auto rho = zero_mat();
    auto term = zero_mat();
    for (size_t i = 0; i < m; ++i) {
        rho[i][i] = MultiPoly::constant(nv, 1);
        term[i][i] = MultiPoly::constant(nv, 1);
    }
    for (size_t k = 1; k <= m; ++k) {
        auto next = zero_mat();
        bool zero = true;
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < m; ++c) {
                MultiPoly s(nv);
                for (size_t t = 0; t < m; ++t)
                    if (!term[r][t].is_zero() && !z[t][c].is_zero()) s += term[r][t] * z[t][c];
                next[r][c] = s.scaled(Q(1) / Q(static_cast<unsigned>(k)));
                if (!next[r][c].is_zero()) zero = false;
            }
        term = std::move(next);
        if (zero) break;
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < m; ++c) rho[r][c] += term[r][c];
    }

    // conjugate into the (1, mu_1, ..., mu_n) coordinates
    std::vector<MultiPoly> out;
    for (size_t r = 0; r < m; ++r) {
        MultiPoly formula(nv);
        for (size_t c = 0; c < m; ++c) {
            MultiPoly entry(nv);
            for (size_t s = 0; s < m; ++s) {
                if (inv.at(r, s) == 0) continue;
                for (size_t t = 0; t < m; ++t)
                    if (basis_change.at(t, c) != 0 && !rho[s][t].is_zero())
                        entry += rho[s][t].scaled(inv.at(r, s) * basis_change.at(t, c));
            }
            if (!entry.is_zero()) formula += entry * MultiPoly::variable(nv, n + c);
        }
        out.push_back(formula);
    }
    return out;
}

Subspace fixed_locus(const Algebra& a) {
    maximal_ideal(a);  // locality gate
    return socle(a);
}

bool is_cyclic_module(const GeneratingSubspace& v) {
    check_generating_subspace(v);
    size_t n = v.nvars;
    size_t dim = v.basis.size();

    std::vector<MultiPoly> ders;
    for (const auto& p : v.basis)
        for (size_t i = 0; i < n; ++i) {
            MultiPoly d = derivative(p, i);
            if (!d.is_zero()) ders.push_back(d);
        }
    size_t der_dim = ders.empty() ? 0 : span_dim(n, ders);
    // socle of the annihilator algebra is the quotient by the derivative image
    bool gorenstein = (dim - der_dim == 1);

    auto closure_spans = [&](const MultiPoly& f) {
        std::vector<MultiPoly> closure{f};
        for (size_t idx = 0; idx < closure.size(); ++idx)
            for (size_t i = 0; i < n; ++i) {
                MultiPoly d = derivative(closure[idx], i);
                if (d.is_zero()) continue;
                if (std::find(closure.begin(), closure.end(), d) == closure.end())
                    closure.push_back(d);
            }
        return span_dim(n, closure) == dim;
    };

    bool found = false;
    for (const auto& p : v.basis)
        if (closure_spans(p)) {
            found = true;
            break;
        }
    if (!found) {
        std::mt19937 rng(46116);
        std::uniform_int_distribution<int> pick(-4, 4);
        for (int attempt = 0; attempt < 16 && !found; ++attempt) {
            MultiPoly f(n);
            for (const auto& p : v.basis) f += p.scaled(Q(pick(rng)));
            if (!f.is_zero() && closure_spans(f)) found = true;
        }
    }
    if (found != gorenstein)
        fail(ErrorCode::Internal, "cyclic search disagrees with the socle criterion");
    return found;
}

bool duality_check(const GaPair& p, const std::vector<Q>& beta, const std::vector<Q>& g,
                   const MultiPoly& f) {
    size_t n = p.n(), m = p.m();
    if (beta.size() != n || g.size() != m || f.nvars() != n)
        fail(ErrorCode::Internal, "duality check arity mismatch");

    GroebnerBasis ideal = ideal_from_pair(p);
    QuotientPresentation qp2 = quotient_presentation(n, ideal.gens, ideal.order);
    if (qp2.algebra.dim() != m) fail(ErrorCode::Internal, "presentation dimension drifted");

    auto vals = evaluate_monomials(p.qp.algebra, p.u_basis, qp2.basis_monomials);
    QMatrix phi(m, m);
    for (size_t c = 0; c < m; ++c)
        for (size_t r = 0; r < m; ++r) phi.at(r, c) = vals[c][r];
    QMatrix phinv = phi.inverse();

    auto lift = [&](const std::vector<Q>& coords) { return qp2.lift(phinv.apply(coords)); };

    std::vector<Q> w(m, Q(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < m; ++k) w[k] += beta[i] * p.u_basis[i][k];
    auto e = p.qp.algebra.exp_nilpotent(w);
    auto h = p.qp.algebra.multiply(e, g);

    Q lhs = pairing(lift(h), f);
    Q rhs = pairing(lift(g), translate(f, beta));
    return lhs == rhs;
}

}  // namespace addact
